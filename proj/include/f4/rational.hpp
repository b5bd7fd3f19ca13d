#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace f4 {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not canonicalize; this does.
inline Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Exact integer check plus extraction; throws when q is not integral.
inline long rat_to_long(const Rat& q) {
  if (q.get_den() != 1) throw std::domain_error("rational is not an integer: " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer too large: " + q.get_str());
  return q.get_num().get_si();
}

}  // namespace f4
