#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "birmap/rational.hpp"

namespace birmap {

// Coefficient domain Q[a]/(m(a)) with m monic of degree >= 1; degree 1 is Q itself.
// Irreducibility of m is assumed, not checked up front: a zero divisor met during
// inversion raises ReducibleModulus.
class NumberField {
public:
  // modulus lowest-first, monic, size degree+1.
  const std::vector<Rat>& modulus() const { return mod_; }
  int degree() const { return static_cast<int>(mod_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  bool same(const NumberField& o) const { return mod_ == o.mod_; }
  std::string describe() const;

  static const std::shared_ptr<const NumberField>& rationals();
  static std::shared_ptr<const NumberField> make(std::vector<Rat> modulus);

private:
  explicit NumberField(std::vector<Rat> mod) : mod_(std::move(mod)) {}
  std::vector<Rat> mod_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElem {
public:
  FieldElem() = default;
  FieldElem(FieldPtr field, std::vector<Rat> coeffs);

  static FieldElem zero(const FieldPtr& f);
  static FieldElem one(const FieldPtr& f);
  static FieldElem from_rat(const FieldPtr& f, const Rat& q);
  static FieldElem from_int(const FieldPtr& f, long n) { return from_rat(f, rat(n)); }
  // the generator a (requires degree >= 2)
  static FieldElem gen(const FieldPtr& f);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;           // all coordinates above 1 vanish
  Rat rational_part() const;          // coordinate of 1 (exact value when is_rational())

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem scaled(const Rat& q) const;
  // dst += a*b without intermediate normalization churn
  static void addmul(FieldElem& dst, const FieldElem& a, const FieldElem& b);

  // Inversion by extended Euclid against the modulus.
  // ZeroInverse on 0; ReducibleModulus when gcd with the modulus is non-constant.
  FieldElem inv() const;
  FieldElem pow(long e) const;

  std::string to_string() const;  // "n/d" over Q, "[c0, c1, ...]" otherwise

private:
  void reduce_(std::vector<Rat>& work) const;
  FieldPtr field_;
  std::vector<Rat> c_;
};

// field_inv per the exact-arith contract.
inline FieldElem field_inv(const FieldElem& a) { return a.inv(); }

void require_same_field(const FieldElem& a, const FieldElem& b);

// Exact square root inside the field when detectable: complete over Q and over
// quadratic extensions; higher-degree fields only when the radicand is rational.
std::optional<FieldElem> field_sqrt(const FieldElem& a);

}  // namespace birmap
