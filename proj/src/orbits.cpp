#include "f4/orbits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace f4 {

Diagram::Diagram(int e1, int e2, int e3, int e4) : eps{e1, e2, e3, e4} {
  for (int e : eps)
    if (e < 0 || e > 2) throw std::invalid_argument("diagram labels must be 0, 1 or 2");
}

int Diagram::level(const Root& alpha) const {
  int s = 0;
  for (int i = 0; i < 4; ++i) s += eps[i] * alpha.n[i];
  return s;
}

std::string Diagram::str() const {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    s += char('0' + eps[i]);
    if (i < 3) s += ',';
  }
  return s + ")";
}

const std::vector<Root> Grading::empty_;

Grading::Grading(const Diagram& d) {
  for (const Root& a : rootsys::positive_roots()) {
    int n = d.level(a);
    if (n >= 1) levels_[n].push_back(a);
  }
}

const std::vector<Root>& Grading::at(int n) const {
  auto it = levels_.find(n);
  return it == levels_.end() ? empty_ : it->second;
}

std::vector<Root> Grading::from(int n) const {
  std::vector<Root> out;
  for (const auto& [lvl, roots] : levels_)
    if (lvl >= n) out.insert(out.end(), roots.begin(), roots.end());
  std::sort(out.begin(), out.end());
  return out;
}

int Grading::size() const {
  int s = 0;
  for (const auto& [lvl, roots] : levels_) s += (int)roots.size();
  return s;
}

namespace orbits {
namespace {

std::vector<OrbitRecord> build_catalog() {
  auto rec = [](std::string label, std::string pretty, Diagram d, int dim,
                std::string stab, bool displayed) {
    OrbitRecord r;
    r.label = std::move(label);
    r.pretty = std::move(pretty);
    r.diagram = d;
    r.dim = dim;
    r.half_dim = half_dim(d);
    r.stabilizer = std::move(stab);
    r.diagram_displayed = displayed;
    return r;
  };
  std::vector<OrbitRecord> v;
  v.push_back(rec("0", "0", {0, 0, 0, 0}, 0, "F4", false));
  v.push_back(rec("A1", "A1", {1, 0, 0, 0}, 16, "C3 (Sp6)", true));
  v.push_back(rec("A1t", "A~1", {0, 0, 0, 1}, 22, "A3 (SL4)", false));
  v.push_back(rec("A1+A1t", "A1+A~1", {0, 1, 0, 0}, 28, "A1 x A1", true));
  v.push_back(rec("A2", "A2", {2, 0, 0, 0}, 30, "A2 (SL3; unitary forms occur)", false));
  v.push_back(rec("A2t", "A~2", {0, 0, 0, 2}, 30, "G2", true));
  v.push_back(rec("A2+A1t", "A2+A~1", {0, 0, 1, 0}, 34, "A1 (SO3)", false));
  v.push_back(rec("B2", "B2", {2, 0, 0, 1}, 36, "A1 x A1 (Spin4 / Spin(1,3))", true));
  v.push_back(rec("A2t+A1", "A~2+A1", {0, 1, 0, 1}, 36, "A1", true));
  v.push_back(rec("C3a1", "C3(a1)", {1, 0, 1, 0}, 38, "A1", true));
  v.push_back(rec("F4a3", "F4(a3)", {0, 2, 0, 0}, 40, "trivial (finite)", false));
  v.push_back(rec("B3", "B3", {2, 2, 0, 0}, 42, "A1", true));
  v.push_back(rec("C3", "C3", {1, 0, 1, 2}, 42, "A1", true));
  v.push_back(rec("F4a2", "F4(a2)", {0, 2, 0, 2}, 44, "trivial (finite)", false));
  v.push_back(rec("F4a1", "F4(a1)", {2, 2, 0, 2}, 46, "trivial", true));
  v.push_back(rec("F4", "F4", {2, 2, 2, 2}, 48, "trivial", false));
  return v;
}

std::string normalize(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ' ' || c == '_') continue;
    t += (char)std::tolower((unsigned char)c);
  }
  // Fold the tilde spellings "~a2" and "a~2" into the ascii alias "a2t".
  std::string out;
  for (size_t i = 0; i < t.size();) {
    if (t[i] == '~' && i + 2 < t.size() && t[i + 1] == 'a' && std::isdigit((unsigned char)t[i + 2])) {
      out += 'a';
      out += t[i + 2];
      out += 't';
      i += 3;
    } else if (t[i] == 'a' && i + 2 < t.size() && t[i + 1] == '~' &&
               std::isdigit((unsigned char)t[i + 2])) {
      out += 'a';
      out += t[i + 2];
      out += 't';
      i += 3;
    } else {
      out += t[i];
      ++i;
    }
  }
  return out;
}

// Hasse covers of the closure order (a covered by b: a immediately below b).
const std::vector<std::pair<const char*, const char*>> kCovers = {
    {"0", "A1"},        {"A1", "A1t"},      {"A1t", "A1+A1t"},  {"A1+A1t", "A2"},
    {"A1+A1t", "A2t"},  {"A2", "A2+A1t"},   {"A2+A1t", "B2"},   {"A2+A1t", "A2t+A1"},
    {"A2t", "A2t+A1"},  {"B2", "C3a1"},     {"A2t+A1", "C3a1"}, {"C3a1", "F4a3"},
    {"F4a3", "B3"},     {"F4a3", "C3"},     {"B3", "F4a2"},     {"C3", "F4a2"},
    {"F4a2", "F4a1"},   {"F4a1", "F4"},
};

const std::map<std::string, std::set<std::string>>& below_sets() {
  static const std::map<std::string, std::set<std::string>> sets = [] {
    std::map<std::string, std::set<std::string>> below;  // below[b] = {a : a <= b}
    for (const auto& r : catalog()) below[r.label].insert(r.label);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [lo, hi] : kCovers)
        for (const auto& a : below[lo])
          if (below[hi].insert(a).second) grew = true;
    }
    return below;
  }();
  return sets;
}

}  // namespace

const std::vector<OrbitRecord>& catalog() {
  static const std::vector<OrbitRecord> c = build_catalog();
  return c;
}

std::optional<OrbitRecord> find_label(const std::string& label) {
  std::string key = normalize(label);
  for (const auto& r : catalog()) {
    if (normalize(r.label) == key || normalize(r.pretty) == key) return r;
  }
  return std::nullopt;
}

const OrbitRecord& by_label(const std::string& label) {
  std::string key = normalize(label);
  for (const auto& r : catalog())
    if (normalize(r.label) == key || normalize(r.pretty) == key) return r;
  throw std::invalid_argument("unknown orbit label: '" + label + "'");
}

Grading grading(const Diagram& d) { return Grading(d); }

int half_dim(const Diagram& d) {
  Grading g(d);
  int u1 = (int)g.at(1).size();
  if (u1 % 2 != 0) throw std::logic_error("odd |U'(1)| for diagram " + d.str());
  return g.dim_from(2) + u1 / 2;
}

std::vector<OrbitRecord> with_half_dim(int k) {
  std::vector<OrbitRecord> out;
  for (const auto& r : catalog())
    if (r.half_dim == k) out.push_back(r);
  return out;
}

bool closure_leq(const std::string& a, const std::string& b) {
  const auto& ra = by_label(a);
  const auto& rb = by_label(b);
  return below_sets().at(rb.label).count(ra.label) > 0;
}

}  // namespace orbits
}  // namespace f4
