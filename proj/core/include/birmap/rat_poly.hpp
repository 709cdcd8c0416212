#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birmap/rational.hpp"

namespace birmap {

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim_(); }
  static RatPoly zero() { return RatPoly(); }
  static RatPoly constant(const Rat& q) { return RatPoly({q}); }
  static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }
  // x^n with coefficient c
  static RatPoly monomial(int n, const Rat& c);

  const std::vector<Rat>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rat leading() const { return c_.back(); }

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scaled(const Rat& q) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  RatPoly pow(int e) const;

  // quotient/remainder; exact division raises NotDivisible on nonzero remainder
  static std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);
  static RatPoly div_exact(const RatPoly& a, const RatPoly& b);
  static RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic

  std::string to_string(const std::string& var = "x") const;

private:
  void trim_();
  std::vector<Rat> c_;
};

// Yun's squarefree decomposition: product of factor^multiplicity reproduces p up to
// the leading unit; factors monic, pairwise coprime, squarefree.
std::vector<std::pair<RatPoly, int>> squarefree_decomp(const RatPoly& p);

struct RatInterval {
  Rat lo, hi;  // lo < hi unless the root is pinned exactly (lo == hi)
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
};

// Disjoint isolating intervals, one per real root of squarefree p in (lo, hi],
// each of width <= width.
std::vector<RatInterval> sturm_isolate(const RatPoly& p, const Rat& lo, const Rat& hi, const Rat& width);

// Number of real roots of squarefree p in (lo, hi] by Sturm sign variations.
int sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi);

// Smallest N with p | x^N - 1, searched among orders d with phi(d) <= deg p per
// squarefree factor; nullopt when some root is not a root of unity.
std::optional<int> cyclotomic_test(const RatPoly& p);

// All rational roots, exactly, without integer factorization (Sturm isolation +
// smallest-denominator reconstruction inside each isolating interval).
std::vector<Rat> rational_roots(const RatPoly& p);

// Cauchy bound: all real roots lie in (-B, B).
Rat root_bound(const RatPoly& p);

// Smallest-denominator rational in the closed interval [lo, hi].
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

}  // namespace birmap
