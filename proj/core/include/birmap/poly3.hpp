#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "birmap/kpoly.hpp"
#include "birmap/number_field.hpp"

namespace birmap {

// Exponent triple packed for graded-lex x0 > x1 > x2: larger packed key = larger
// monomial. One sparse type serves both homogeneous trivariate curves/components
// (HPoly of the domain model) and affine bivariate polynomials (APoly: e0 = 0).
struct Mono {
  int e0 = 0, e1 = 0, e2 = 0;
  int total() const { return e0 + e1 + e2; }
  uint64_t key() const {
    return (static_cast<uint64_t>(total()) << 48) | (static_cast<uint64_t>(e0) << 32) |
           (static_cast<uint64_t>(e1) << 16) | static_cast<uint64_t>(e2);
  }
  static Mono from_key(uint64_t k) {
    return Mono{static_cast<int>((k >> 32) & 0xffff), static_cast<int>((k >> 16) & 0xffff),
                static_cast<int>(k & 0xffff)};
  }
  bool divides(const Mono& o) const { return e0 <= o.e0 && e1 <= o.e1 && e2 <= o.e2; }
};

class Poly3 {
public:
  using Term = std::pair<uint64_t, FieldElem>;

  Poly3() = default;
  explicit Poly3(FieldPtr f) : field_(std::move(f)) {}

  static Poly3 zero(const FieldPtr& f) { return Poly3(f); }
  static Poly3 constant(const FieldPtr& f, const FieldElem& a);
  static Poly3 monomial(const FieldPtr& f, Mono m, const FieldElem& a);
  static Poly3 variable(const FieldPtr& f, int var);
  static Poly3 from_terms(const FieldPtr& f, std::vector<std::tuple<int, int, int, FieldElem>> terms);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  int degree() const;              // total degree, -1 for zero
  bool is_homogeneous() const;
  Term leading() const { return t_.back(); }  // graded-lex leading term
  FieldElem coeff(const Mono& m) const;

  Poly3 operator-() const;
  Poly3 operator+(const Poly3& o) const;
  Poly3 operator-(const Poly3& o) const;
  Poly3 operator*(const Poly3& o) const;
  Poly3 scaled(const FieldElem& a) const;
  Poly3 scaled_rat(const Rat& q) const;
  bool operator==(const Poly3& o) const;

  Poly3 mul_mono(const Mono& m, const FieldElem& a) const;
  Poly3 derivative(int var) const;
  FieldElem eval(const std::array<FieldElem, 3>& x) const;
  // affine (e0 = 0) evaluation
  FieldElem eval_xy(const FieldElem& x, const FieldElem& y) const;

  // leading coefficient scaled to 1 (graded-lex)
  Poly3 monic() const;
  // divide out the rational content (common rational scale of all coordinates)
  Poly3 rational_primitive() const;

  // max power of x_var dividing the polynomial
  int var_valuation(int var) const;
  Poly3 shift_var(int var, int by) const;  // multiply by x_var^by (by may be negative if divisible)

  Poly3 homogenized(int target_degree) const;  // pads with x0 powers (e0 must be 0)
  Poly3 dehomogenized() const;                 // x0 := 1

  std::string to_string() const;

private:
  void normalize_();
  friend Poly3 poly_mul(const Poly3&, const Poly3&);
  FieldPtr field_;
  std::vector<Term> t_;  // ascending key, nonzero coefficients
};

// Exact division; raises NotDivisible with the witness remainder leading term.
Poly3 poly_div_exact(const Poly3& a, const Poly3& b);
std::optional<Poly3> poly_try_div(const Poly3& a, const Poly3& b);

// Multivariate gcd by primitive PRS on the dehomogenized bivariate image,
// exploiting homogeneity; result monic under graded-lex.
Poly3 poly_gcd(const Poly3& a, const Poly3& b);

// c(fx, fy, fz) by nested Horner; DegreeMismatch unless deg fx = deg fy = deg fz.
Poly3 poly_subst(const Poly3& c, const Poly3& fx, const Poly3& fy, const Poly3& fz);

// Normal-form remainder and quotient modulo a single divisor (graded-lex).
std::pair<Poly3, Poly3> poly_divmod(const Poly3& a, const Poly3& b);

// Parse affine bivariate support helpers.
Poly3 apoly_from_terms(const FieldPtr& f, std::vector<std::tuple<int, int, FieldElem>> xy_terms);

}  // namespace birmap
