#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f4/orbits.hpp"
#include "f4/rootsys.hpp"

namespace f4 {

// Embedded one-parameter torus of a stabilizer subgroup, shipped as data.
struct SubTorusEntry {
  std::string host;        // orbit label
  std::string tag;         // stabilizer-orbit tag: "(2)", "(3)", "(2|2)", "G2", "G2(a1)"
  CocharWeight weight;     // exponents of the embedded torus in h(t1..t4)
  int dim_sigma = 0;       // half-dimension of the stabilizer orbit
  // Roots carrying the host Fourier character in the paper's coordinates;
  // the sub-torus must pair to zero with each of them.
  std::vector<Root> char_support;
};

struct TorusMatch {
  std::string label;
  WeylWord witness;  // weyl_apply_cochar(witness, input) == torus_of_orbit(label)
};

// Diagonal exponents of the torus attached to a symplectic partition.
struct PartitionTorus {
  int two_n = 0;
  std::vector<int> partition;
  std::vector<int> exponents;  // length 2n, descending within each part merge
};

namespace tori {

// G_O(alpha) = sum eps_i n_i.
int g_value(const Diagram& d, const Root& alpha);

// Exponents of h_O(t), computed both by the closed form
//   r1 = G(2342), r2 = r1 + 2 r4 - G(1122), r3 = (r2 + G(1242))/2, r4 = G(1232)
// and by an exact linear solve of <alpha, r> = level(alpha) over all of
// U_Delta; the two must agree and the system must be consistent.
CocharWeight torus_of_orbit(const Diagram& d);
CocharWeight torus_of_orbit(const std::string& label);

CocharWeight compose(const CocharWeight& a, const CocharWeight& b);

// Search all 1152 Weyl elements for one carrying r onto some orbit torus.
// Deterministic: elements are scanned in breadth-first order and the first
// witness is returned.
std::optional<TorusMatch> match_to_orbit(const CocharWeight& r);

const std::vector<SubTorusEntry>& sub_torus_table();
const SubTorusEntry& sub_torus(const std::string& host, const std::string& tag);

// Symplectic partition torus: partition of two_n, odd parts with even
// multiplicity; each part p contributes the string (p-1, p-3, ..., 1-p).
PartitionTorus sp_partition_torus(int two_n, const std::vector<int>& partition);

// Signed-permutation search in the Weyl group of Sp_{2n} (order 2^n n!):
// find a signed permutation of the first n exponents carrying `from` to `to`.
// Exponent vectors are full diagonals (a1..an, -an..-a1 order not assumed;
// vectors must satisfy e[i] = -e[2n-1-i]).
std::optional<std::vector<int>> sp_weyl_match(const std::vector<int>& from,
                                              const std::vector<int>& to);

}  // namespace tori
}  // namespace f4
