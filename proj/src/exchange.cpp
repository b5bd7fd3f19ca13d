#include "f4/exchange.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "f4/chevalley.hpp"

namespace f4 {

namespace {

bool root_sum(const Root& a, const Root& b, Root* out) {
  std::array<int, 4> s;
  for (int k = 0; k < 4; ++k) s[k] = a.n[k] + b.n[k];
  if (s == std::array<int, 4>{0, 0, 0, 0} || !rootsys::is_root(s)) return false;
  out->n = s;
  return true;
}

bool scaled_sum(const Root& a, int i, const Root& b, int j, Root* out) {
  std::array<int, 4> s;
  for (int k = 0; k < 4; ++k) s[k] = i * a.n[k] + j * b.n[k];
  if (s == std::array<int, 4>{0, 0, 0, 0} || !rootsys::is_root(s)) return false;
  out->n = s;
  return true;
}

}  // namespace

void ExchangeDatum::validate_invariants() const {
  std::set<Root> seen = u;
  for (const auto& [r, mode] : extras) {
    (void)mode;
    if (!seen.insert(r).second)
      throw std::invalid_argument("duplicate root in datum: " + r.str());
  }
  for (const Root& s : char_support) {
    if (!u.count(s) && !extra_mode(s))
      throw std::invalid_argument("character-support root outside U and extras: " + s.str());
  }
  // U must be a group: any root sum of two U-roots stays in U.
  for (const Root& a : u)
    for (const Root& b : u) {
      Root s;
      if (root_sum(a, b, &s) && !u.count(s))
        throw std::invalid_argument("U not closed: " + a.str() + " + " + b.str() + " = " +
                                    s.str() + " missing");
    }
}

const ExtraMode* ExchangeDatum::extra_mode(const Root& r) const {
  for (const auto& [root, mode] : extras)
    if (root == r) return &mode;
  return nullptr;
}

int ExchangeDatum::compact_count() const {
  int c = (int)u.size();
  for (const auto& [root, mode] : extras) {
    (void)root;
    if (mode == ExtraMode::Compact) ++c;
  }
  return c;
}

bool ExchangeReport::valid() const {
  for (const auto& c : conditions)
    if (!c.pass && !c.assumed) return false;
  return true;
}

std::string ExchangeReport::summary() const {
  std::ostringstream os;
  os << "exchange " << beta.str() << " -> " << gamma.str() << " (support root " << alpha.str()
     << ", |c| = " << constant_magnitude << "): ";
  bool first = true;
  for (const auto& c : conditions) {
    if (!first) os << "; ";
    first = false;
    os << c.name << " " << (c.assumed ? "assumed" : (c.pass ? "ok" : "FAILED"));
    if (!c.pass && !c.assumed && !c.detail.empty()) os << " (" << c.detail << ")";
  }
  return os.str();
}

namespace exchange {

ExchangeReport validate_exchange(const ExchangeDatum& d, const Root& alpha, const Root& beta,
                                 const Root& gamma) {
  ExchangeReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.gamma = gamma;

  // Roots visible to the unipotent bookkeeping: U plus compact extras.
  std::set<Root> compact = d.u;
  for (const auto& [root, mode] : d.extras)
    if (mode == ExtraMode::Compact) compact.insert(root);

  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.conditions.push_back({std::move(name), pass, false, std::move(detail)});
  };

  bool support_ok =
      std::find(d.char_support.begin(), d.char_support.end(), alpha) != d.char_support.end();
  add("alpha in character support", support_ok, alpha.str());

  const ExtraMode* bmode = d.extra_mode(beta);
  add("beta is a compact integration", bmode && *bmode == ExtraMode::Compact, beta.str());

  bool gamma_fresh = !d.in_u(gamma) &&
                     std::find(d.char_support.begin(), d.char_support.end(), gamma) ==
                         d.char_support.end();
  if (const ExtraMode* gmode = d.extra_mode(gamma))
    gamma_fresh = *gmode == ExtraMode::FullAdelic;  // re-activating an exchanged root is fine
  add("gamma fresh", gamma_fresh, gamma.str());

  Root sum;
  bool is_sum = root_sum(beta, gamma, &sum) && sum == alpha;
  add("(i) beta + gamma = alpha", is_sum);

  int n = chevalley::structure_constant(beta, gamma);
  bool sum_is_root = root_sum(beta, gamma, &sum);
  if (sum_is_root != (n != 0))
    throw std::logic_error("structure constants disagree with root addition");
  rep.constant_magnitude = n < 0 ? -n : n;
  add("(ii) N_{beta,gamma} != 0", n != 0);

  {  // (iii) higher commutator roots i*beta + j*gamma live in the compact group
    bool ok = true;
    std::string detail;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        if (i == 1 && j == 1) continue;
        Root h;
        if (!scaled_sum(beta, i, gamma, j, &h)) continue;
        if (!compact.count(h)) {
          ok = false;
          detail = h.str() + " outside U and compact extras";
        }
      }
    add("(iii) higher commutator roots in U", ok, detail);
  }

  {  // (iv) gamma normalizes the unipotent configuration: commutators with
     // U-roots must stay inside it, or land on positive roots away from the
     // character support (those are absorbed by enlarging the group).
    std::set<Root> configuration = d.u;
    for (const auto& [root, mode] : d.extras) {
      (void)mode;
      configuration.insert(root);
    }
    bool ok = true;
    std::string detail;
    for (const Root& delta : d.u) {
      for (int i = 1; i <= 3 && ok; ++i)
        for (int j = 1; j <= 3; ++j) {
          Root h;
          if (!scaled_sum(gamma, i, delta, j, &h)) continue;
          if (configuration.count(h)) continue;
          bool on_support =
              std::find(d.char_support.begin(), d.char_support.end(), h) != d.char_support.end();
          if (h.positive() && !on_support) continue;
          ok = false;
          detail = "[" + gamma.str() + ", " + delta.str() + "] meets " + h.str() +
                   (on_support ? " on the character support" : " outside the configuration");
          break;
        }
      if (!ok) break;
    }
    add("(iv) gamma normalizes U", ok, detail);
  }

  rep.conditions.push_back({"left invariance under x_gamma", true, true,
                            "analytic hypothesis; not combinatorially checkable"});
  return rep;
}

ExchangeDatum apply_exchange(const ExchangeDatum& d, const Root& alpha, const Root& beta,
                             const Root& gamma) {
  ExchangeReport rep = validate_exchange(d, alpha, beta, gamma);
  if (!rep.valid()) throw std::invalid_argument("invalid exchange: " + rep.summary());
  ExchangeDatum out = d;
  int before = d.compact_count();
  for (auto& [root, mode] : out.extras)
    if (root == beta) mode = ExtraMode::FullAdelic;
  bool present = false;
  for (auto& [root, mode] : out.extras)
    if (root == gamma) {
      mode = ExtraMode::Compact;
      present = true;
    }
  if (!present) out.extras.emplace_back(gamma, ExtraMode::Compact);
  if (out.compact_count() != before)
    throw std::logic_error("exchange changed the compact root count");
  return out;
}

ExchangeDatum extend(const ExchangeDatum& d, const Root& r) {
  if (d.in_u(r) || d.extra_mode(r))
    throw std::invalid_argument("extend root already present: " + r.str());
  ExchangeDatum out = d;
  out.extras.emplace_back(r, ExtraMode::Compact);
  return out;
}

ReplayResult replay(const ExchangeDatum& start, const std::vector<ExchangeStep>& script) {
  ReplayResult res;
  res.final_datum = start;
  res.final_datum.validate_invariants();
  for (const auto& step : script) {
    if (step.kind == ExchangeStep::Extend) {
      try {
        res.final_datum = extend(res.final_datum, step.extend_root);
      } catch (const std::exception& e) {
        res.failure = e.what();
        return res;
      }
      continue;
    }
    ExchangeReport rep = validate_exchange(res.final_datum, step.alpha, step.beta, step.gamma);
    res.reports.push_back(rep);
    if (!rep.valid()) {
      res.failure = rep.summary();
      return res;
    }
    res.final_datum = apply_exchange(res.final_datum, step.alpha, step.beta, step.gamma);
  }
  res.completed = true;
  return res;
}

Fixture parse_fixture(std::istream& in, const std::string& name) {
  Fixture f;
  f.name = name;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream is(line);
    std::string cmd;
    if (!(is >> cmd)) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument(name + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (cmd == "u") {
      std::string tok;
      while (is >> tok) f.datum.u.insert(Root::parse(tok));
    } else if (cmd == "support") {
      std::string tok;
      while (is >> tok) f.datum.char_support.push_back(Root::parse(tok));
    } else if (cmd == "extra") {
      std::string mode, tok;
      if (!(is >> mode >> tok)) fail("extra needs a mode and a root");
      ExtraMode m;
      if (mode == "compact")
        m = ExtraMode::Compact;
      else if (mode == "adelic")
        m = ExtraMode::FullAdelic;
      else {
        fail("unknown extra mode '" + mode + "'");
        return f;  // unreachable
      }
      f.datum.extras.emplace_back(Root::parse(tok), m);
    } else if (cmd == "exchange") {
      std::string a, b, g;
      if (!(is >> a >> b >> g)) fail("exchange needs alpha beta gamma");
      ExchangeStep s;
      s.kind = ExchangeStep::Exchange;
      s.alpha = Root::parse(a);
      s.beta = Root::parse(b);
      s.gamma = Root::parse(g);
      f.script.push_back(s);
    } else if (cmd == "extend") {
      std::string tok;
      if (!(is >> tok)) fail("extend needs a root");
      ExchangeStep s;
      s.kind = ExchangeStep::Extend;
      s.extend_root = Root::parse(tok);
      f.script.push_back(s);
    } else {
      fail("unknown directive '" + cmd + "'");
    }
  }
  f.datum.validate_invariants();
  return f;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture file: " + path);
  return parse_fixture(in, path);
}

namespace {

const std::map<std::string, const char*>& builtin_texts();

}  // namespace

const std::vector<std::string>& builtin_fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, text] : builtin_texts()) {
      (void)text;
      n.push_back(name);
    }
    return n;
  }();
  return names;
}

Fixture builtin_fixture(const std::string& name) {
  auto it = builtin_texts().find(name);
  if (it == builtin_texts().end())
    throw std::invalid_argument("unknown builtin fixture: '" + name + "'");
  std::istringstream is(it->second);
  return parse_fixture(is, name);
}

namespace {

// Root data for the proof chains; every set is reproduced from the stated
// unipotent groups after the stated Weyl conjugations.

const char* kThmMini1B2 = R"(
# Minimality proof, B2 case: the two exchanges after conjugating by w[2134].
u 0010 0011 1000 0120 0121 0122 1110 1111 1120 1121 1122 1220 1222 1231 1232 1242 1342 2342
support 1000 0121
extra compact -1100
extra compact -0100
exchange 0121 -1100 1221
exchange 1000 -0100 1100
)";

const char* kC3Descent = R"(
# C3 constant-term computation: five exchanges against the Whittaker
# character of Sp6, with the expansion along (1111) kept in between.
u 0100 0010 0001 0110 0011 0120 0111 0121 0122
u 1122 1221 1231 1222 1232 1242 1342 2342
support 0100 0010 0001
extra compact -1000
extra compact -1100
extra compact -1110
extra compact -1120
extra compact -1111
exchange 0100 -1120 1220
exchange 0010 -1111 1121
exchange 0010 -1110 1120
extend 1111
exchange 0010 -1100 1110
exchange 0100 -1000 1100
)";

const char* kB3Descent = R"(
# B3 nonvanishing: exchanges feeding the F4(a2) coefficient.
u 1000 0111 0120 0121 0122 1110 1111 1120 1121 1122 1220 1221 1222 1231 1232 1242 1342 2342
support 0111 0120 1000
extra compact 0100
extra compact 0110
extra compact 1100
exchange 0111 0100 0011
exchange 0111 0110 0001
exchange 1000 1100 -0100
)";

const char* kC3a1Descent = R"(
# C3(a1) constant-term computation: four exchanges in sequence.
u 0010 0001 0110 0011 0120 0111 0121 0122
u 1122 1221 1222 1231 1232 1242 1342 2342
support 0001 0110 0011
extra compact -1000
extra compact -1100
extra compact -1110
extra compact -1120
exchange 0110 -1110 1220
exchange 0001 -1120 1121
exchange 0011 -1100 1111
exchange 0110 -1000 1110
)";

const char* kA2A1tDescent = R"(
# A2+A~1 nonvanishing: three exchanges toward the F4(a3) coefficient.
u 0111 0122 1110 1111 1121 1122 1220 1221 1222 1231 1232 1242 1342 2342
support 0122 1121 1220
extra compact 0120
extra compact 0121
extra compact 1120
exchange 1220 0120 1100
exchange 0122 0121 0001
exchange 1220 1120 0100
)";

const char* kA2tWhittaker = R"(
# A~2 descent to G2, Whittaker case, opening exchanges.
u 0121 1111 1121 1221 1231 0122 1122 1222 1232 1242 1342 2342
support 0121 1111
extra compact 0001
extra compact 0011
extra compact 0111
exchange 1111 0001 1110
exchange 1111 0011 1100
exchange 1111 0111 1000
)";

const char* kA2tWhittakerMid = R"(
# A~2 descent to G2, Whittaker case, middle exchanges after w[3234].
u 0001 0011 0100 0111 0122 1100 1110 1111 1120 1121 1122
u 1220 1221 1222 1231 1232 1242 1342 2342
support 0001 0100 1110 1120
extra compact 1000
extra compact -0120
exchange 0001 -0120 0121
exchange 1110 1000 0110
)";

const char* kA2tWhittakerDeep = R"(
# A~2 descent to G2, Whittaker case, the five exchanges against the Sp6
# Whittaker character.
u 0100 0010 0001 0110 0011 0120 0111 0121 0122
u 1122 1221 1222 1231 1232 1242 1342 2342
support 0100 0010 0001
extra compact -1000
extra compact -1100
extra compact -1110
extra compact -1111
extra compact -1120
exchange 0100 -1120 1220
exchange 0010 -1111 1121
exchange 0010 -1110 1120
extend 1111
exchange 0010 -1100 1110
exchange 0100 -1000 1100
)";

const char* kA2tG2a1 = R"(
# A~2 descent to G2, G2(a1) coefficient: two exchanges.
u 0121 0111 1111 1121 1221 1231 0122 1122 1222 1232 1242 1342 2342
support 0121 1111
extra compact 0001
extra compact 0011
exchange 1111 0001 1110
exchange 1111 0011 1100
)";

const std::map<std::string, const char*>& builtin_texts() {
  static const std::map<std::string, const char*> m = {
      {"thm-mini1-b2", kThmMini1B2},
      {"c3-descent", kC3Descent},
      {"b3-descent", kB3Descent},
      {"c3a1-descent", kC3a1Descent},
      {"a2a1t-descent", kA2A1tDescent},
      {"a2t-g2-whittaker", kA2tWhittaker},
      {"a2t-g2-whittaker-mid", kA2tWhittakerMid},
      {"a2t-g2-whittaker-deep", kA2tWhittakerDeep},
      {"a2t-g2a1", kA2tG2a1},
  };
  return m;
}

}  // namespace

}  // namespace exchange
}  // namespace f4
