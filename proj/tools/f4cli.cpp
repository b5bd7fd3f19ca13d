// Command-line interface: every subcommand prints a deterministic envelope
// in JSON or TSV.  Exit codes: 0 success, 1 failed verification, 2 usage.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "f4/chevalley.hpp"
#include "f4/descent.hpp"
#include "f4/exchange.hpp"
#include "f4/orbits.hpp"
#include "f4/rootsys.hpp"
#include "f4/selftest.hpp"
#include "f4/stabilizers.hpp"
#include "f4/tori.hpp"

using json = nlohmann::ordered_json;
using namespace f4;

namespace {

struct Output {
  std::string command;
  std::string format = "json";
  json payload = json::object();
  std::vector<std::vector<std::string>> tsv;  // rows for tsv mode
  int status = 0;

  int emit() const {
    if (format == "json") {
      json env;
      env["schema"] = 1;
      env["command"] = command;
      env["status"] = status == 0 ? "ok" : "fail";
      env["payload"] = payload;
      std::cout << env.dump(2) << "\n";
    } else {
      std::cout << "# schema\t1\n# command\t" << command << "\n# status\t"
                << (status == 0 ? "ok" : "fail") << "\n";
      for (const auto& row : tsv) {
        for (size_t i = 0; i < row.size(); ++i)
          std::cout << row[i] << (i + 1 < row.size() ? "\t" : "");
        std::cout << "\n";
      }
    }
    return status;
  }
};

std::string join_roots(const std::vector<Root>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += v[i].str() + (i + 1 < v.size() ? " " : "");
  return s;
}

json orbit_json(const OrbitRecord& r) {
  json o;
  o["label"] = r.label;
  o["pretty"] = r.pretty;
  o["diagram"] = {r.diagram.eps[0], r.diagram.eps[1], r.diagram.eps[2], r.diagram.eps[3]};
  o["dim"] = r.dim;
  o["half_dim"] = r.half_dim;
  o["stabilizer"] = r.stabilizer;
  o["diagram_displayed"] = r.diagram_displayed;
  Grading g(r.diagram);
  json levels = json::object();
  for (const auto& [lvl, roots] : g.levels()) levels[std::to_string(lvl)] = (int)roots.size();
  o["level_counts"] = levels;
  return o;
}

std::array<Rat, 6> parse_six(const std::string& s) {
  std::array<Rat, 6> out;
  std::string t = s;
  for (auto& c : t)
    if (c == ',') c = ' ';
  std::istringstream is(t);
  std::string tok;
  for (int i = 0; i < 6; ++i) {
    if (!(is >> tok)) throw std::invalid_argument("expected 6 rationals");
    out[i] = rat_parse(tok);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact F4 root-system, Chevalley-group and unipotent-orbit toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));

  Output out;

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "list the F4 roots");
  bool roots_count = false;
  std::string roots_member;
  roots_cmd->add_flag("--count", roots_count, "print only the number of roots");
  roots_cmd->add_option("--member", roots_member, "test membership of a coefficient vector");
  roots_cmd->callback([&] {
    if (roots_count) {
      out.payload["count"] = (int)rootsys::all_roots().size();
      out.tsv.push_back({"count", std::to_string(rootsys::all_roots().size())});
      return;
    }
    if (!roots_member.empty()) {
      bool ok = true;
      try {
        Root::parse(roots_member);
      } catch (const std::exception&) {
        ok = false;
      }
      out.payload["member"] = ok;
      out.tsv.push_back({roots_member, ok ? "root" : "not-a-root"});
      return;
    }
    json arr = json::array();
    for (const Root& r : rootsys::positive_roots()) {
      json e;
      e["root"] = r.str();
      e["height"] = r.height();
      e["length"] = rootsys::is_long(r) ? "long" : "short";
      json cp = json::array();
      for (int i = 1; i <= 4; ++i) cp.push_back(rootsys::copair(r, i));
      e["copair"] = cp;
      arr.push_back(e);
      out.tsv.push_back({r.str(), std::to_string(r.height()),
                         rootsys::is_long(r) ? "long" : "short"});
    }
    out.payload["positive_roots"] = arr;
  });

  // weyl
  auto* weyl_cmd = app.add_subcommand("weyl", "apply Weyl words; enumerate the group");
  std::string weyl_word, weyl_root, weyl_weight;
  bool weyl_order = false;
  weyl_cmd->add_option("--word", weyl_word, "word, e.g. w[234]");
  weyl_cmd->add_option("--root", weyl_root, "root to act on");
  weyl_cmd->add_option("--weight", weyl_weight, "cocharacter weight r1,r2,r3,r4 to act on");
  weyl_cmd->add_flag("--order", weyl_order, "print the order of the Weyl group");
  weyl_cmd->callback([&] {
    if (weyl_order) {
      out.payload["order"] = (int)rootsys::weyl_elements().size();
      out.tsv.push_back({"order", std::to_string(rootsys::weyl_elements().size())});
      return;
    }
    WeylWord w = WeylWord::parse(weyl_word);
    if (!weyl_root.empty()) {
      Root r = rootsys::weyl_apply(w, Root::parse(weyl_root));
      out.payload["image"] = r.str();
      out.tsv.push_back({w.str(), weyl_root, r.str()});
    }
    if (!weyl_weight.empty()) {
      CocharWeight r = rootsys::weyl_apply_cochar(w, CocharWeight::parse(weyl_weight));
      out.payload["image_weight"] = r.str();
      out.tsv.push_back({w.str(), weyl_weight, r.str()});
    }
  });

  // commutator
  auto* comm_cmd = app.add_subcommand("commutator", "Chevalley commutator expansion");
  std::string comm_a, comm_b;
  bool comm_table = false;
  comm_cmd->add_option("--alpha", comm_a, "first root");
  comm_cmd->add_option("--beta", comm_b, "second root");
  comm_cmd->add_flag("--dump-constants", comm_table,
                     "dump the structure-constant table (alpha, beta, alpha+beta, N)");
  comm_cmd->callback([&] {
    if (comm_table) {
      json arr = json::array();
      for (const Root& a : rootsys::all_roots())
        for (const Root& b : rootsys::all_roots()) {
          int n = chevalley::structure_constant(a, b);
          if (n == 0) continue;
          Root s(std::array<int, 4>{a.n[0] + b.n[0], a.n[1] + b.n[1], a.n[2] + b.n[2],
                                    a.n[3] + b.n[3]});
          arr.push_back({a.str(), b.str(), s.str(), n});
          out.tsv.push_back({a.str(), b.str(), s.str(), std::to_string(n)});
        }
      out.payload["constants"] = arr;
      return;
    }
    auto exp = chevalley::commutator_formula(Root::parse(comm_a), Root::parse(comm_b));
    json arr = json::array();
    for (const auto& t : exp) {
      json e;
      e["root"] = t.root.str();
      e["coeff"] = t.coeff.get_str();
      e["deg"] = {t.deg_i, t.deg_j};
      arr.push_back(e);
      out.tsv.push_back({t.root.str(), t.coeff.get_str(),
                         std::to_string(t.deg_i), std::to_string(t.deg_j)});
    }
    out.payload["terms"] = arr;
  });

  // orbits
  auto* orbits_cmd = app.add_subcommand("orbits", "the sixteen-orbit catalog");
  int orbits_halfdim = -1;
  std::string orbits_label;
  orbits_cmd->add_option("--half-dim", orbits_halfdim, "filter by half-dimension");
  orbits_cmd->add_option("--orbit", orbits_label, "single orbit record");
  orbits_cmd->callback([&] {
    json arr = json::array();
    auto push = [&](const OrbitRecord& r) {
      arr.push_back(orbit_json(r));
      out.tsv.push_back({r.label, r.diagram.str(), std::to_string(r.dim),
                         std::to_string(r.half_dim), r.stabilizer});
    };
    if (!orbits_label.empty())
      push(orbits::by_label(orbits_label));
    else if (orbits_halfdim >= 0)
      for (const auto& r : orbits::with_half_dim(orbits_halfdim)) push(r);
    else
      for (const auto& r : orbits::catalog()) push(r);
    out.payload["orbits"] = arr;
  });

  // grade
  auto* grade_cmd = app.add_subcommand("grade", "graded root sets U'(n) of an orbit");
  std::string grade_label;
  grade_cmd->add_option("orbit", grade_label, "orbit label")->required();
  grade_cmd->callback([&] {
    const auto& rec = orbits::by_label(grade_label);
    Grading g(rec.diagram);
    json levels = json::object();
    for (const auto& [lvl, roots] : g.levels()) {
      json lr = json::array();
      for (const Root& r : roots) lr.push_back(r.str());
      levels[std::to_string(lvl)] = lr;
      out.tsv.push_back({std::to_string(lvl), join_roots(roots)});
    }
    out.payload["orbit"] = rec.label;
    out.payload["levels"] = levels;
    out.payload["dim_u"] = g.size();
    out.payload["dim_u2"] = g.dim_from(2);
    out.payload["half_dim"] = rec.half_dim;
  });

  // torus
  auto* torus_cmd = app.add_subcommand("torus", "one-parameter torus attached to an orbit");
  std::string torus_label;
  torus_cmd->add_option("orbit", torus_label, "orbit label")->required();
  torus_cmd->callback([&] {
    const auto& rec = orbits::by_label(torus_label);
    CocharWeight w = tori::torus_of_orbit(rec.diagram);
    out.payload["orbit"] = rec.label;
    out.payload["weight"] = w.str();
    out.tsv.push_back({rec.label, w.str()});
  });

  // match-torus
  auto* match_cmd = app.add_subcommand("match-torus", "identify a weight up to Weyl action");
  std::string match_weight;
  match_cmd->add_option("--weight", match_weight, "r1,r2,r3,r4")->required();
  match_cmd->callback([&] {
    auto m = tori::match_to_orbit(CocharWeight::parse(match_weight));
    if (!m) {
      out.payload["match"] = nullptr;
      out.tsv.push_back({match_weight, "no-match"});
      out.status = 1;
      return;
    }
    out.payload["label"] = m->label;
    out.payload["witness_word"] = m->witness.str();
    out.payload["weight"] = tori::torus_of_orbit(m->label).str();
    out.tsv.push_back({match_weight, m->label, m->witness.str()});
  });

  // compose
  auto* compose_cmd = app.add_subcommand("compose", "compose an orbit torus with a sub-torus");
  std::string compose_orbit, compose_sub, compose_tag;
  compose_cmd->add_option("--orbit", compose_orbit, "host orbit")->required();
  compose_cmd->add_option("--sub", compose_sub, "sub-torus weight r1,r2,r3,r4");
  compose_cmd->add_option("--tag", compose_tag, "stabilizer-orbit tag, e.g. (2), G2(a1)");
  compose_cmd->callback([&] {
    CocharWeight host = tori::torus_of_orbit(compose_orbit);
    CocharWeight sub;
    if (!compose_tag.empty())
      sub = tori::sub_torus(compose_orbit, compose_tag).weight;
    else if (!compose_sub.empty())
      sub = CocharWeight::parse(compose_sub);
    else
      throw CLI::ValidationError("compose", "need --sub or --tag");
    CocharWeight total = tori::compose(host, sub);
    out.payload["host_weight"] = host.str();
    out.payload["sub_weight"] = sub.str();
    out.payload["composite"] = total.str();
    auto m = tori::match_to_orbit(total);
    if (m) {
      out.payload["label"] = m->label;
      out.payload["witness_word"] = m->witness.str();
      out.tsv.push_back({total.str(), m->label, m->witness.str()});
    } else {
      out.payload["label"] = nullptr;
      out.tsv.push_back({total.str(), "no-match"});
    }
  });

  // stab
  auto* stab_cmd = app.add_subcommand("stab", "character stabilizer computations");
  std::string stab_kind, stab_a, stab_b, stab_char;
  stab_cmd->add_option("kind", stab_kind, "f4a3 or f4a2")->required();
  stab_cmd->add_option("--A", stab_a, "six rationals r1..r6");
  stab_cmd->add_option("--B", stab_b, "six rationals r1..r6");
  stab_cmd->add_option("--char", stab_char, "eight rationals a1..a6,g1,g2");
  stab_cmd->callback([&] {
    if (stab_kind == "f4a3") {
      Mat3J A(parse_six(stab_a)), B(parse_six(stab_b));
      auto res = stabilizers::f4a3_stab(A, B);
      out.payload["dimension"] = res.dimension;
      json basis = json::array();
      for (const auto& v : res.basis) {
        json row = json::array();
        for (const Rat& x : v) row.push_back(rat_str(x));
        basis.push_back(row);
      }
      out.payload["basis"] = basis;
      out.tsv.push_back({"dimension", std::to_string(res.dimension)});
    } else if (stab_kind == "f4a2") {
      std::array<Rat, 8> vals;
      {
        std::string t = stab_char;
        for (auto& ch : t)
          if (ch == ',') ch = ' ';
        std::istringstream is(t);
        std::string tok;
        for (int i = 0; i < 8; ++i) {
          if (!(is >> tok)) throw std::invalid_argument("expected 8 rationals");
          vals[i] = rat_parse(tok);
        }
      }
      F4a2Char chi;
      for (int i = 0; i < 6; ++i) chi.a[i] = vals[i];
      chi.gamma1 = vals[6];
      chi.gamma2 = vals[7];
      int dim = stabilizers::f4a2_stab_dim(chi);
      out.payload["dimension"] = dim;
      out.tsv.push_back({"dimension", std::to_string(dim)});
    } else {
      throw CLI::ValidationError("stab", "kind must be f4a3 or f4a2");
    }
  });

  // discriminant
  auto* disc_cmd = app.add_subcommand("discriminant", "f(m,n,z) for the F4(a3) pair system");
  std::vector<std::string> disc_args;
  disc_cmd->add_option("mnz", disc_args, "m n z")->expected(3);
  disc_cmd->callback([&] {
    Rat m = rat_parse(disc_args[0]), n = rat_parse(disc_args[1]), z = rat_parse(disc_args[2]);
    Rat f = stabilizers::f4a3_discriminant(m, n, z);
    out.payload["f"] = rat_str(f);
    out.payload["reduced_system_det"] = rat_str(linalg::det(stabilizers::f4a3_reduced_system(m, n, z)));
    out.tsv.push_back({rat_str(f)});
  });

  // descent
  auto* descent_cmd = app.add_subcommand("descent", "descent dimension table");
  std::string descent_what = "table";
  descent_cmd->add_option("what", descent_what, "'table'");
  descent_cmd->callback([&] {
    if (descent_what != "table") throw CLI::ValidationError("descent", "expected 'table'");
    json arr = json::array();
    for (const auto& row : descent::descent_table()) {
      json e;
      e["orbit"] = row.orbit;
      e["stabilizer"] = row.stabilizer;
      e["dim_sigma"] = row.dim_sigma;
      e["dim_e"] = row.dim_e;
      e["feasible"] = row.feasible;
      e["witnesses"] = row.witnesses;
      arr.push_back(e);
      std::string w;
      for (const auto& x : row.witnesses) w += x + " ";
      out.tsv.push_back({row.orbit, std::to_string(row.dim_sigma), std::to_string(row.dim_e),
                         row.feasible ? "feasible" : "infeasible", w});
    }
    out.payload["table"] = arr;
  });

  // pairs
  auto* pairs_cmd = app.add_subcommand("pairs", "the five commuting-pair feasibility reports");
  std::string pairs_which;
  pairs_cmd->add_option("pair", pairs_which, "optional single pair, e.g. SL2,Sp6");
  pairs_cmd->callback([&] {
    std::vector<std::string> names =
        pairs_which.empty() ? descent::pair_names() : std::vector<std::string>{pairs_which};
    json arr = json::array();
    for (const auto& name : names) {
      auto rep = descent::pair_feasibility(name);
      json p;
      p["pair"] = rep.pair;
      json dirs = json::array();
      for (const auto& dir : rep.directions) {
        json dj;
        dj["description"] = dir.description;
        json opts = json::array();
        for (const auto& o : dir.options) {
          json oj;
          oj["dim_sigma"] = o.dim_sigma;
          oj["dim_e"] = o.dim_e;
          oj["feasible"] = o.feasible;
          oj["witnesses"] = o.witnesses;
          opts.push_back(oj);
          out.tsv.push_back({rep.pair, std::to_string(o.dim_sigma), std::to_string(o.dim_e),
                             o.feasible ? "feasible" : "infeasible"});
        }
        dj["options"] = opts;
        dirs.push_back(dj);
      }
      p["directions"] = dirs;
      arr.push_back(p);
    }
    out.payload["pairs"] = arr;
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify a composition identity");
  std::string verify_name;
  bool verify_all = false;
  verify_cmd->add_option("name", verify_name, "identity name, e.g. C3o2");
  verify_cmd->add_flag("--all", verify_all, "verify every stored identity");
  verify_cmd->callback([&] {
    std::vector<std::string> names;
    if (verify_all || verify_name == "all")
      for (const auto& id : descent::identities()) names.push_back(id.name);
    else if (!verify_name.empty())
      names.push_back(verify_name);
    else
      throw CLI::ValidationError("verify", "need an identity name or --all");
    json arr = json::array();
    for (const auto& name : names) {
      auto rep = descent::verify_composition(name);
      json e;
      e["name"] = rep.identity.name;
      e["group"] = rep.identity.group;
      e["host"] = rep.identity.host;
      e["sub"] = rep.identity.sub_tag;
      e["leading"] = rep.identity.leading;
      e["extra_terms"] = rep.identity.extra_terms;
      e["pass"] = rep.pass;
      e["detail"] = rep.detail;
      if (rep.identity.group == "F4" && rep.pass) {
        e["composite"] = rep.composite.str();
        e["witness_word"] = rep.witness.str();
      }
      arr.push_back(e);
      out.tsv.push_back({rep.identity.name, rep.pass ? "pass" : "FAIL", rep.detail});
      if (!rep.pass) out.status = 1;
    }
    out.payload["identities"] = arr;
  });

  // exchange
  auto* exch_cmd = app.add_subcommand("exchange", "replay a root-exchange fixture");
  std::string exch_action, exch_file;
  exch_cmd->add_option("action", exch_action, "'replay' or 'list'")->required();
  exch_cmd->add_option("file", exch_file, "fixture file path or builtin fixture name");
  exch_cmd->callback([&] {
    if (exch_action == "list") {
      out.payload["fixtures"] = exchange::builtin_fixture_names();
      for (const auto& n : exchange::builtin_fixture_names()) out.tsv.push_back({n});
      return;
    }
    if (exch_action != "replay") throw CLI::ValidationError("exchange", "unknown action");
    exchange::Fixture fx;
    try {
      fx = exchange::load_fixture(exch_file);
    } catch (const std::exception&) {
      fx = exchange::builtin_fixture(exch_file);
    }
    auto res = exchange::replay(fx.datum, fx.script);
    out.payload["fixture"] = fx.name;
    out.payload["completed"] = res.completed;
    if (!res.completed) {
      out.payload["failure"] = res.failure;
      out.status = 1;
    }
    json steps = json::array();
    for (const auto& rep : res.reports) {
      steps.push_back(rep.summary());
      out.tsv.push_back({rep.valid() ? "ok" : "FAIL", rep.summary()});
    }
    out.payload["steps"] = steps;
  });

  // selftest
  auto* self_cmd = app.add_subcommand("selftest", "run the full verification suite");
  self_cmd->callback([&] {
    auto results = selftest::run_all();
    json arr = json::array();
    for (const auto& r : results) {
      json e;
      e["criterion"] = r.number;
      e["title"] = r.title;
      e["pass"] = r.pass;
      e["seconds"] = r.seconds;
      if (!r.pass) e["detail"] = r.detail;
      arr.push_back(e);
      std::ostringstream line;
      line << "criterion " << r.number << ": " << r.title << " ... "
           << (r.pass ? "PASS" : "FAIL");
      std::cerr << line.str() << "\n";
      if (!r.pass) std::cerr << "    " << r.detail << "\n";
      out.tsv.push_back({std::to_string(r.number), r.pass ? "PASS" : "FAIL", r.title});
    }
    out.payload["criteria"] = arr;
    if (!selftest::all_passed(results)) out.status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream cmd;
  for (int i = 1; i < argc; ++i) cmd << (i > 1 ? " " : "") << argv[i];
  out.command = cmd.str();
  out.format = format;
  return out.emit();
}
