#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "f4/rootsys.hpp"

namespace f4 {

enum class ExtraMode { Compact, FullAdelic };

// Root-combinatorial state of a unipotent integration: the group U (root
// set, closed under addition of roots), the character-support roots, and
// attached one-parameter integrations with their mode.
struct ExchangeDatum {
  std::set<Root> u;
  std::vector<Root> char_support;
  std::vector<std::pair<Root, ExtraMode>> extras;

  void validate_invariants() const;  // throws on violation
  bool in_u(const Root& r) const { return u.count(r) > 0; }
  const ExtraMode* extra_mode(const Root& r) const;
  int compact_count() const;  // |U| + number of compact extras
};

struct ExchangeCondition {
  std::string name;
  bool pass = false;
  bool assumed = false;  // analytic hypothesis, reported but never checked
  std::string detail;
};

struct ExchangeReport {
  Root alpha, beta, gamma;
  std::vector<ExchangeCondition> conditions;
  int constant_magnitude = 0;  // |N_{beta,gamma}|
  bool valid() const;
  std::string summary() const;
};

struct ExchangeStep {
  enum Kind { Exchange, Extend } kind = Exchange;
  Root alpha, beta, gamma;  // Exchange
  Root extend_root;         // Extend
};

struct ReplayResult {
  ExchangeDatum final_datum;
  std::vector<ExchangeReport> reports;  // one per exchange step
  bool completed = false;
  std::string failure;
};

namespace exchange {

ExchangeReport validate_exchange(const ExchangeDatum& d, const Root& alpha, const Root& beta,
                                 const Root& gamma);

// Applies a validated exchange: beta becomes full-adelic, gamma joins as a
// compact integration; U and the character support are untouched.  Throws
// with the report text when validation fails.
ExchangeDatum apply_exchange(const ExchangeDatum& d, const Root& alpha, const Root& beta,
                             const Root& gamma);

// Fourier expansion along a fresh root, keeping the constant-term branch:
// the root joins the compact integrations with no character.
ExchangeDatum extend(const ExchangeDatum& d, const Root& r);

ReplayResult replay(const ExchangeDatum& start, const std::vector<ExchangeStep>& script);

// Line-oriented fixture format:
//   u <root> <root> ...            (repeatable)
//   support <root> ...
//   extra compact|adelic <root>
//   exchange <alpha> <beta> <gamma>
//   extend <root>
// '#' starts a comment.
struct Fixture {
  std::string name;
  ExchangeDatum datum;
  std::vector<ExchangeStep> script;
};

Fixture parse_fixture(std::istream& in, const std::string& name);
Fixture load_fixture(const std::string& path);

// The proof-chain fixtures shipped with the library, keyed by name.
const std::vector<std::string>& builtin_fixture_names();
Fixture builtin_fixture(const std::string& name);

}  // namespace exchange
}  // namespace f4
