#pragma once

#include <utility>
#include <vector>

#include "birmap/number_field.hpp"

namespace birmap {

// Dense univariate polynomial over a number field, lowest degree first.
class KPoly {
public:
  KPoly() = default;
  explicit KPoly(FieldPtr f) : field_(std::move(f)) {}
  KPoly(FieldPtr f, std::vector<FieldElem> c) : field_(std::move(f)), c_(std::move(c)) { trim_(); }

  static KPoly constant(const FieldElem& a);
  static KPoly monomial(const FieldPtr& f, int n, const FieldElem& a);

  const FieldPtr& field() const { return field_; }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const FieldElem& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  FieldElem leading() const { return c_.back(); }

  KPoly operator-() const;
  KPoly operator+(const KPoly& o) const;
  KPoly operator-(const KPoly& o) const;
  KPoly operator*(const KPoly& o) const;
  KPoly scaled(const FieldElem& a) const;
  bool operator==(const KPoly& o) const;

  FieldElem eval(const FieldElem& x) const;
  KPoly derivative() const;
  KPoly monic() const;

  static std::pair<KPoly, KPoly> divrem(const KPoly& a, const KPoly& b);
  static KPoly div_exact(const KPoly& a, const KPoly& b);
  static KPoly gcd(const KPoly& a, const KPoly& b);  // monic

  std::string to_string(const std::string& var = "x") const;

private:
  void trim_();
  FieldPtr field_;
  std::vector<FieldElem> c_;
};

}  // namespace birmap
