#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f4/rootsys.hpp"

namespace f4 {

// Node labels (eps1..eps4) in {0,1,2} on the diagram a1 -- a2 => a3 -- a4.
struct Diagram {
  std::array<int, 4> eps{0, 0, 0, 0};

  Diagram() = default;
  Diagram(int e1, int e2, int e3, int e4);

  // level(alpha) = sum eps_i n_i.
  int level(const Root& alpha) const;
  bool operator==(const Diagram& o) const { return eps == o.eps; }
  std::string str() const;
};

// Partition of the roots of U_Delta by level.
class Grading {
 public:
  explicit Grading(const Diagram& d);

  const std::map<int, std::vector<Root>>& levels() const { return levels_; }
  const std::vector<Root>& at(int n) const;             // U'_Delta(n); empty when absent
  std::vector<Root> from(int n) const;                  // roots of U_Delta(n), levels >= n
  int size() const;                                     // |U_Delta|
  int dim_from(int n) const { return (int)from(n).size(); }

 private:
  std::map<int, std::vector<Root>> levels_;
  static const std::vector<Root> empty_;
};

struct OrbitRecord {
  std::string label;         // ascii label, e.g. "A2t+A1"
  std::string pretty;        // display label, e.g. "A~2+A1"
  Diagram diagram;
  int dim = 0;               // dimension of the orbit
  int half_dim = 0;          // dim U_Delta(2) + |U'_Delta(1)|/2
  std::string stabilizer;    // reductive type of the stabilizer, as text
  bool diagram_displayed = false;  // false: diagram derived from parabolic data
};

namespace orbits {

// The 16 orbits (zero orbit first), fixed order by dimension then label.
const std::vector<OrbitRecord>& catalog();

// Lookup by label; accepts ascii aliases ("A2t", "F4a3", "A1+A1t", ...) and
// a few variants ("F4(a3)", "~A2", case-insensitive).
const OrbitRecord& by_label(const std::string& label);
std::optional<OrbitRecord> find_label(const std::string& label);

Grading grading(const Diagram& d);
int half_dim(const Diagram& d);

std::vector<OrbitRecord> with_half_dim(int k);

// Closure partial order from the shipped Hasse data: true iff a lies in the
// closure of b.
bool closure_leq(const std::string& a, const std::string& b);

}  // namespace orbits
}  // namespace f4
