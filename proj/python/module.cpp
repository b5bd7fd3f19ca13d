// Python bindings for the main operations.  Exact rationals cross the
// boundary as strings; everything else is plain ints and strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "f4/chevalley.hpp"
#include "f4/descent.hpp"
#include "f4/exchange.hpp"
#include "f4/orbits.hpp"
#include "f4/rootsys.hpp"
#include "f4/selftest.hpp"
#include "f4/stabilizers.hpp"
#include "f4/tori.hpp"

namespace py = pybind11;
using namespace f4;

namespace {

std::vector<long> weight_list(const CocharWeight& w) {
  return {w.r[0], w.r[1], w.r[2], w.r[3]};
}

CocharWeight to_weight(const std::vector<long>& v) {
  if (v.size() != 4) throw std::invalid_argument("weight needs 4 entries");
  return {v[0], v[1], v[2], v[3]};
}

py::dict orbit_dict(const OrbitRecord& r) {
  py::dict d;
  d["label"] = r.label;
  d["pretty"] = r.pretty;
  d["diagram"] = std::vector<int>(r.diagram.eps.begin(), r.diagram.eps.end());
  d["dim"] = r.dim;
  d["half_dim"] = r.half_dim;
  d["stabilizer"] = r.stabilizer;
  d["diagram_displayed"] = r.diagram_displayed;
  return d;
}

Mat3J mat3_from(const std::vector<std::string>& six) {
  if (six.size() != 6) throw std::invalid_argument("expected 6 rationals");
  Mat3J m;
  for (int i = 0; i < 6; ++i) m.r[i] = rat_parse(six[i]);
  return m;
}

}  // namespace

PYBIND11_MODULE(_f4chev, m) {
  m.doc() = "exact F4 root-system, Chevalley-group and unipotent-orbit toolkit";

  m.def("positive_roots", [] {
    std::vector<std::string> out;
    for (const Root& r : rootsys::positive_roots()) out.push_back(r.str());
    return out;
  });
  m.def("is_root", [](const std::string& s) {
    try {
      Root::parse(s);
      return true;
    } catch (const std::exception&) {
      return false;
    }
  });
  m.def("copair",
        [](const std::string& root, int i) { return rootsys::copair(Root::parse(root), i); });
  m.def("weyl_apply", [](const std::string& word, const std::string& root) {
    return rootsys::weyl_apply(WeylWord::parse(word), Root::parse(root)).str();
  });
  m.def("weyl_apply_cochar", [](const std::string& word, const std::vector<long>& w) {
    return weight_list(rootsys::weyl_apply_cochar(WeylWord::parse(word), to_weight(w)));
  });
  m.def("weyl_order", [] { return (int)rootsys::weyl_elements().size(); });

  m.def("orbit_catalog", [] {
    py::list out;
    for (const auto& r : orbits::catalog()) out.append(orbit_dict(r));
    return out;
  });
  m.def("orbit", [](const std::string& label) { return orbit_dict(orbits::by_label(label)); });
  m.def("grading", [](const std::string& label) {
    Grading g(orbits::by_label(label).diagram);
    py::dict out;
    for (const auto& [lvl, roots] : g.levels()) {
      std::vector<std::string> rs;
      for (const Root& r : roots) rs.push_back(r.str());
      out[py::int_(lvl)] = rs;
    }
    return out;
  });
  m.def("half_dim", [](const std::string& label) { return orbits::by_label(label).half_dim; });
  m.def("orbits_with_half_dim", [](int k) {
    std::vector<std::string> out;
    for (const auto& r : orbits::with_half_dim(k)) out.push_back(r.label);
    return out;
  });
  m.def("closure_leq", [](const std::string& a, const std::string& b) {
    return orbits::closure_leq(a, b);
  });

  m.def("torus_of_orbit",
        [](const std::string& label) { return weight_list(tori::torus_of_orbit(label)); });
  m.def("compose", [](const std::vector<long>& a, const std::vector<long>& b) {
    return weight_list(tori::compose(to_weight(a), to_weight(b)));
  });
  m.def("match_to_orbit", [](const std::vector<long>& w) -> py::object {
    auto match = tori::match_to_orbit(to_weight(w));
    if (!match) return py::none();
    py::dict d;
    d["label"] = match->label;
    d["witness_word"] = match->witness.str();
    return d;
  });
  m.def("sp_partition_torus", [](int two_n, const std::vector<int>& partition) {
    return tori::sp_partition_torus(two_n, partition).exponents;
  });

  m.def("commutator_formula", [](const std::string& alpha, const std::string& beta) {
    py::list out;
    for (const auto& t : chevalley::commutator_formula(Root::parse(alpha), Root::parse(beta))) {
      py::dict d;
      d["root"] = t.root.str();
      d["coeff"] = t.coeff.get_str();
      d["deg"] = py::make_tuple(t.deg_i, t.deg_j);
      out.append(d);
    }
    return out;
  });
  m.def("structure_constant", [](const std::string& a, const std::string& b) {
    return chevalley::structure_constant(Root::parse(a), Root::parse(b));
  });

  m.def("f4a3_stab_dim", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return stabilizers::f4a3_stab(mat3_from(a), mat3_from(b)).dimension;
  });
  m.def("f4a3_discriminant",
        [](const std::string& mm, const std::string& nn, const std::string& zz) {
          return rat_str(
              stabilizers::f4a3_discriminant(rat_parse(mm), rat_parse(nn), rat_parse(zz)));
        });
  m.def("f4a2_stab_dim", [](const std::vector<std::string>& eight) {
    if (eight.size() != 8) throw std::invalid_argument("expected 8 rationals");
    F4a2Char chi;
    for (int i = 0; i < 6; ++i) chi.a[i] = rat_parse(eight[i]);
    chi.gamma1 = rat_parse(eight[6]);
    chi.gamma2 = rat_parse(eight[7]);
    return stabilizers::f4a2_stab_dim(chi);
  });

  m.def("check_dim_equation", [](long pi, long theta, long h, long v, long sigma) {
    return descent::check_dim_equation({pi, theta, h, v, sigma, ""});
  });
  m.def("descent_table", [] {
    py::list out;
    for (const auto& row : descent::descent_table()) {
      py::dict d;
      d["orbit"] = row.orbit;
      d["dim_sigma"] = row.dim_sigma;
      d["dim_e"] = row.dim_e;
      d["feasible"] = row.feasible;
      d["witnesses"] = row.witnesses;
      out.append(d);
    }
    return out;
  });
  m.def("pair_feasibility", [](const std::string& pair) {
    auto rep = descent::pair_feasibility(pair);
    py::list dirs;
    for (const auto& dir : rep.directions) {
      py::dict d;
      d["description"] = dir.description;
      py::list opts;
      for (const auto& o : dir.options) {
        py::dict od;
        od["dim_sigma"] = o.dim_sigma;
        od["dim_e"] = o.dim_e;
        od["feasible"] = o.feasible;
        opts.append(od);
      }
      d["options"] = opts;
      dirs.append(d);
    }
    py::dict out;
    out["pair"] = rep.pair;
    out["directions"] = dirs;
    return out;
  });
  m.def("composition_identities", [] {
    std::vector<std::string> out;
    for (const auto& id : descent::identities()) out.push_back(id.name);
    return out;
  });
  m.def("verify_composition", [](const std::string& name) {
    auto rep = descent::verify_composition(name);
    py::dict d;
    d["name"] = rep.identity.name;
    d["pass"] = rep.pass;
    d["leading"] = rep.identity.leading;
    d["detail"] = rep.detail;
    if (rep.identity.group == "F4" && rep.pass) {
      d["composite"] = weight_list(rep.composite);
      d["witness_word"] = rep.witness.str();
    }
    return d;
  });

  m.def("exchange_fixtures", [] { return exchange::builtin_fixture_names(); });
  m.def("replay_fixture", [](const std::string& name_or_path) {
    exchange::Fixture fx;
    try {
      fx = exchange::load_fixture(name_or_path);
    } catch (const std::exception&) {
      fx = exchange::builtin_fixture(name_or_path);
    }
    auto res = exchange::replay(fx.datum, fx.script);
    py::dict d;
    d["fixture"] = fx.name;
    d["completed"] = res.completed;
    d["failure"] = res.failure;
    std::vector<std::string> steps;
    for (const auto& r : res.reports) steps.push_back(r.summary());
    d["steps"] = steps;
    return d;
  });

  m.def("selftest", [] {
    py::list out;
    for (const auto& r : selftest::run_all()) {
      py::dict d;
      d["criterion"] = r.number;
      d["title"] = r.title;
      d["pass"] = r.pass;
      d["seconds"] = r.seconds;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  });
}
