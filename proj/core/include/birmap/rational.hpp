#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "birmap/errors.hpp"

namespace birmap {

// Exact rational; mpq_class keeps gcd(num,den)=1 and den>0 canonically.
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Accepts "n", "-n", "n/d" with arbitrary-precision parts.
Rat rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& q);

// Exact square root when q is the square of a rational.
std::optional<Rat> rat_sqrt(const Rat& q);

// floor(log2 |q|) style magnitude proxy used for interval widths; exact compare helpers.
inline int rat_cmp(const Rat& a, const Rat& b) { return cmp(a, b); }

}  // namespace birmap
