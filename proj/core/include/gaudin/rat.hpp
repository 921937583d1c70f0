#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gaudin {

// Exact rational scalar. GMP keeps the invariants (reduced fraction,
// positive denominator) via mpq_canonicalize.
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat_of: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q" or "p"; the parsed value is canonicalized.
inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// Always emits an explicit denominator ("5/1") so the format is uniform.
inline std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace gaudin
