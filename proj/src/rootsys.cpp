#include "f4/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace f4 {
namespace {

// Cartan matrix C[i][j] = <a_j, a_i^vee>; a1, a2 long, a3, a4 short,
// double bond a2 => a3.
constexpr int kCartan[4][4] = {
    {2, -1, 0, 0},
    {-1, 2, -1, 0},
    {0, -2, 2, -1},
    {0, 0, -1, 2},
};

// Doubled Gram matrix 2(a_i, a_j); keeps everything integral.
constexpr int kGram2[4][4] = {
    {4, -2, 0, 0},
    {-2, 4, -2, 0},
    {0, -2, 2, -1},
    {0, 0, -1, 2},
};

std::vector<Root> compute_positive_roots() {
  std::set<std::array<int, 4>> pos;
  for (int i = 0; i < 4; ++i) {
    std::array<int, 4> e{0, 0, 0, 0};
    e[i] = 1;
    pos.insert(e);
  }
  // Closure under simple reflections reaches every root from the simple ones.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& n : std::vector<std::array<int, 4>>(pos.begin(), pos.end())) {
      for (int i = 0; i < 4; ++i) {
        int c = 0;
        for (int j = 0; j < 4; ++j) c += kCartan[i][j] * n[j];
        std::array<int, 4> m = n;
        m[i] -= c;
        int h = m[0] + m[1] + m[2] + m[3];
        if (h > 0 && pos.insert(m).second) grew = true;
      }
    }
  }
  std::vector<Root> out;
  out.reserve(pos.size());
  std::vector<std::array<int, 4>> v(pos.begin(), pos.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int ha = a[0] + a[1] + a[2] + a[3], hb = b[0] + b[1] + b[2] + b[3];
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (const auto& n : v) {
    Root r;
    r.n = n;
    out.push_back(r);
  }
  return out;
}

struct Tables {
  std::vector<Root> positive;
  std::vector<Root> all;
  std::map<std::array<int, 4>, int> id;
  std::array<std::array<std::uint8_t, 48>, 4> refl;  // refl[i-1][id] = id of s_i(root)

  Tables() {
    positive = compute_positive_roots();
    all = positive;
    for (const auto& r : positive) {
      Root m;
      for (int k = 0; k < 4; ++k) m.n[k] = -r.n[k];
      all.push_back(m);
    }
    for (int k = 0; k < (int)all.size(); ++k) id[all[k].n] = k;
    for (int i = 1; i <= 4; ++i)
      for (int k = 0; k < 48; ++k)
        refl[i - 1][k] = (std::uint8_t)id.at(rootsys::reflect(i, all[k]).n);
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

Root::Root(std::array<int, 4> coeffs) : n(coeffs) {
  if (!rootsys::is_root(n)) {
    Root r;
    r.n = n;
    throw std::invalid_argument("not an F4 root: " + r.str());
  }
}

Root Root::operator-() const {
  Root m;
  for (int k = 0; k < 4; ++k) m.n[k] = -n[k];
  return m;
}

bool Root::operator<(const Root& o) const {
  if (height() != o.height()) return height() < o.height();
  return n < o.n;
}

std::string Root::str() const {
  std::string s;
  bool neg = height() < 0;
  if (neg) s += '-';
  for (int k = 0; k < 4; ++k) s += char('0' + (neg ? -n[k] : n[k]));
  return s;
}

Root Root::parse(const std::string& s) {
  std::string t = s;
  int sign = 1;
  if (!t.empty() && t[0] == '-') {
    sign = -1;
    t = t.substr(1);
  }
  if (!t.empty() && t[0] == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  if (t.size() != 4 || t.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad root literal: '" + s + "'");
  std::array<int, 4> n;
  for (int k = 0; k < 4; ++k) n[k] = sign * (t[k] - '0');
  return Root(n);
}

WeylWord::WeylWord(std::vector<int> l) : letters(std::move(l)) {
  for (int i : letters)
    if (i < 1 || i > 4) throw std::invalid_argument("weyl letter out of range");
}

std::string WeylWord::str() const {
  if (letters.empty()) return "e";
  std::string s = "w[";
  for (int i : letters) s += char('0' + i);
  s += ']';
  return s;
}

WeylWord WeylWord::parse(const std::string& s) {
  std::string t = s;
  if (t == "e" || t == "1" || t.empty()) return WeylWord{};
  if (t.size() >= 2 && (t[0] == 'w' || t[0] == 'W')) t = t.substr(1);
  if (!t.empty() && t[0] == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  std::vector<int> letters;
  for (char c : t) {
    if (c == ' ' || c == ',') continue;
    if (c < '1' || c > '4') throw std::invalid_argument("bad weyl word: '" + s + "'");
    letters.push_back(c - '0');
  }
  return WeylWord(std::move(letters));
}

std::string CocharWeight::str() const {
  std::ostringstream os;
  os << '(' << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ')';
  return os.str();
}

CocharWeight CocharWeight::parse(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  CocharWeight w;
  for (int k = 0; k < 4; ++k)
    if (!(is >> w.r[k])) throw std::invalid_argument("bad weight: '" + s + "'");
  return w;
}

namespace rootsys {

bool is_root(const std::array<int, 4>& n) { return tables().id.count(n) > 0; }

const std::vector<Root>& positive_roots() { return tables().positive; }
const std::vector<Root>& all_roots() { return tables().all; }

int root_id(const Root& r) { return tables().id.at(r.n); }
const Root& root_of_id(int id) { return tables().all.at(id); }

Root simple_root(int i) {
  std::array<int, 4> n{0, 0, 0, 0};
  n[i - 1] = 1;
  Root r;
  r.n = n;
  return r;
}

int copair(const Root& alpha, int i) {
  int c = 0;
  for (int j = 0; j < 4; ++j) c += kCartan[i - 1][j] * alpha.n[j];
  return c;
}

int norm2x(const Root& alpha) {
  int s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += alpha.n[i] * alpha.n[j] * kGram2[i][j];
  return s;
}

bool is_long(const Root& alpha) { return norm2x(alpha) == 4; }

Root reflect(int i, const Root& alpha) {
  int c = copair(alpha, i);
  Root r = alpha;
  r.n[i - 1] -= c;
  return r;
}

Root weyl_apply(const WeylWord& w, const Root& alpha) {
  Root r = alpha;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = reflect(*it, r);
  return r;
}

CocharWeight weyl_apply_cochar(const WeylWord& w, const CocharWeight& r) {
  CocharWeight v = r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = *it;
    // s_i on the coroot lattice: r_i -> r_i - sum_j <a_i, a_j^vee> r_j.
    long c = 0;
    for (int j = 0; j < 4; ++j) c += (long)kCartan[j][i - 1] * v.r[j];
    v.r[i - 1] -= c;
  }
  return v;
}

long pairing(const Root& alpha, const CocharWeight& r) {
  long s = 0;
  for (int i = 1; i <= 4; ++i) s += r.r[i - 1] * copair(alpha, i);
  return s;
}

const std::vector<WeylElement>& weyl_elements() {
  static const std::vector<WeylElement> elements = [] {
    const auto& t = tables();
    std::vector<WeylElement> out;
    std::map<std::array<std::uint8_t, 48>, int> seen;
    WeylElement id;
    for (int k = 0; k < 48; ++k) id.perm[k] = (std::uint8_t)k;
    out.push_back(id);
    seen[id.perm] = 0;
    for (size_t head = 0; head < out.size(); ++head) {
      WeylElement cur = out[head];
      for (int i = 1; i <= 4; ++i) {
        // Append letter i on the right: new element w*s_i applies s_i first.
        WeylElement next;
        for (int k = 0; k < 48; ++k) next.perm[k] = cur.perm[t.refl[i - 1][k]];
        if (seen.count(next.perm)) continue;
        next.word = cur.word;
        next.word.letters.push_back(i);
        seen[next.perm] = (int)out.size();
        out.push_back(next);
      }
    }
    return out;
  }();
  return elements;
}

Root apply_element(const WeylElement& w, const Root& alpha) {
  return root_of_id(w.perm[root_id(alpha)]);
}

}  // namespace rootsys
}  // namespace f4
