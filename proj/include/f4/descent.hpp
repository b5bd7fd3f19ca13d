#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f4/rootsys.hpp"
#include "f4/tori.hpp"

namespace f4 {

struct DimCase {
  long dim_pi = 0;
  long dim_theta = 0;  // dim E
  long dim_h = 0;
  long dim_v = 0;
  long dim_sigma = 0;
  std::string description;
};

// One admissible (dim sigma, dim E) option for a commuting pair, in one
// direction, with its feasibility against the orbit catalog.
struct PairOption {
  long dim_sigma = 0;
  long dim_e = 0;
  bool feasible = false;                 // some orbit has half-dimension dim_e
  std::vector<std::string> witnesses;    // orbit labels with that half-dimension
};

struct PairReport {
  std::string pair;  // e.g. "(SL2, Sp6)"
  struct Direction {
    std::string description;
    std::vector<PairOption> options;
  };
  std::vector<Direction> directions;
};

struct DescentRow {
  std::string orbit;
  std::string stabilizer;
  long dim_sigma = 0;
  long dim_e = 0;
  bool feasible = false;
  std::vector<std::string> witnesses;
};

struct CompositionIdentity {
  std::string name;               // stable ascii key, e.g. "C3o2"
  std::string group;              // "F4", "Sp4", "Sp6"
  std::string host;               // host orbit label / partition text
  std::string sub_tag;            // stabilizer-orbit tag
  std::string leading;            // leading right-hand-side orbit
  std::vector<std::string> extra_terms;  // further summands / constant terms, as text
  long expected_dim_e = 0;        // half dim of host + dim sigma
  bool torus_checkable = true;    // false for closed-condition variants
};

struct CompositionReport {
  CompositionIdentity identity;
  bool pass = false;
  std::string detail;
  CocharWeight composite{};       // F4 identities only
  WeylWord witness;               // F4 identities only
};

namespace descent {

bool check_dim_equation(const DimCase& c);

// The worked dimension-identity examples.
const std::vector<DimCase>& dim_examples();

// The five commuting pairs; name is one of
// "SL3,SL3", "SL2xSL2,Sp4", "SL2,SL4", "SO3,G2", "SL2,Sp6".
PairReport pair_feasibility(const std::string& pair);
const std::vector<std::string>& pair_names();

std::vector<DescentRow> descent_table();

const std::vector<CompositionIdentity>& identities();
CompositionReport verify_composition(const std::string& name);

}  // namespace descent
}  // namespace f4
