#pragma once

#include <array>
#include <string>

#include "birmap/number_field.hpp"

namespace birmap {

// Point of P^2; canonical form scales the first nonzero coordinate to 1 and
// equality is tested on canonical forms.
class PPoint {
public:
  PPoint() = default;
  PPoint(FieldElem a, FieldElem b, FieldElem c);

  static PPoint affine(const FieldElem& x, const FieldElem& y);  // [1:x:y]

  const std::array<FieldElem, 3>& coords() const { return x_; }
  const FieldElem& operator[](int i) const { return x_[static_cast<size_t>(i)]; }
  const FieldPtr& field() const { return x_[0].field(); }

  bool operator==(const PPoint& o) const;
  bool operator!=(const PPoint& o) const { return !(*this == o); }

  // index of the first nonzero coordinate (the canonical affine chart)
  int chart() const;
  // the two affine coordinates in chart i (the remaining coordinates divided by x_i)
  std::pair<FieldElem, FieldElem> chart_coords(int i) const;

  std::string to_string() const;

private:
  void canonicalize_();
  std::array<FieldElem, 3> x_;
};

inline PPoint::PPoint(FieldElem a, FieldElem b, FieldElem c) : x_{std::move(a), std::move(b), std::move(c)} {
  canonicalize_();
}

inline PPoint PPoint::affine(const FieldElem& x, const FieldElem& y) {
  return PPoint(FieldElem::one(x.field()), x, y);
}

inline void PPoint::canonicalize_() {
  for (auto& c : x_) {
    if (!c.is_zero()) {
      FieldElem inv = c.inv();
      for (auto& d : x_) d = d * inv;
      return;
    }
  }
  raise(ErrorCode::InvalidParameter, "projective point needs a nonzero coordinate");
}

inline bool PPoint::operator==(const PPoint& o) const {
  return x_[0] == o.x_[0] && x_[1] == o.x_[1] && x_[2] == o.x_[2];
}

inline int PPoint::chart() const {
  for (int i = 0; i < 3; ++i)
    if (!x_[static_cast<size_t>(i)].is_zero()) return i;
  return -1;
}

inline std::pair<FieldElem, FieldElem> PPoint::chart_coords(int i) const {
  FieldElem inv = x_[static_cast<size_t>(i)].inv();
  int j = i == 0 ? 1 : 0;
  int k = i == 2 ? 1 : 2;
  return {x_[static_cast<size_t>(j)] * inv, x_[static_cast<size_t>(k)] * inv};
}

inline std::string PPoint::to_string() const {
  return "[" + x_[0].to_string() + " : " + x_[1].to_string() + " : " + x_[2].to_string() + "]";
}

}  // namespace birmap
