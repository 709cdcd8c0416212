#pragma once

#include <array>
#include <optional>
#include <vector>

#include "birmap/poly3.hpp"
#include "birmap/ppoint.hpp"

namespace birmap {

enum class FamilyTag { Raw, A, B };

// Birational self-map of P^2: three homogeneous components with trivial gcd,
// plus whatever closed-form data the family constructors can attach.
struct BiMap {
  FieldPtr field;
  std::array<Poly3, 3> comp;
  int degree = 0;
  FamilyTag tag = FamilyTag::Raw;
  std::vector<FieldElem> params;  // A: {a0, a1, g0};  B: {a0, a1, b2}

  std::optional<std::array<Poly3, 3>> inverse_comp;
  std::optional<std::vector<PPoint>> indeterminacy;       // O_i
  std::optional<std::vector<Poly3>> exceptional;          // S_i (S_i -> A_i)
  std::optional<std::vector<PPoint>> inv_indeterminacy;   // A_i
  std::optional<std::vector<Poly3>> inv_exceptional;      // T_i

  const FieldElem& param(int i) const { return params[static_cast<size_t>(i)]; }
};

// f(x,y) = (a0 + a1 x + y, x/(g0 + y)); requires a1 != 0.
BiMap make_family_A(const FieldElem& a0, const FieldElem& a1, const FieldElem& g0);

// f(x,y) = (a0 + a1 x, (x + b2 y)/y); requires a1 != 0.
BiMap make_family_B(const FieldElem& a0, const FieldElem& a1, const FieldElem& b2);

BiMap make_identity(const FieldPtr& f);

// Raw map from components; gcd-freeness is checked. Optional closed-form data
// may be declared and is verified where cheap.
BiMap make_raw(std::array<Poly3, 3> comp, std::optional<std::array<Poly3, 3>> inverse = std::nullopt,
               std::optional<std::vector<PPoint>> indeterminacy = std::nullopt,
               std::optional<std::vector<Poly3>> exceptional = std::nullopt);

// Affine conjugation h(x,y) = (ax + b, cy + d).
struct AffineConj {
  FieldElem a, b, c, d;
};

// General a2 = 0 member (a0,a1 | b0,b1,b2 | g0,g2) conjugated to family B shape;
// returns the normalized map and the h used, with h∘g = f∘h verified symbolically.
std::pair<BiMap, AffineConj> normalize_family_B(const FieldElem& b0, const FieldElem& b1,
                                                const FieldElem& b2, const FieldElem& g0,
                                                const FieldElem& g2, const FieldElem& a0,
                                                const FieldElem& a1);

// Composition with the full common factor cancelled.
struct ComposeResult {
  BiMap map;
  int cancelled_degree = 0;
};
ComposeResult map_compose_detailed(const BiMap& f, const BiMap& g, size_t term_cap = 200000);
BiMap map_compose(const BiMap& f, const BiMap& g);

// Image point, or nullopt exactly when all three components vanish (Indeterminate).
std::optional<PPoint> map_evaluate(const BiMap& f, const PPoint& p);

// d_1..d_n_max of the reduced iterates (d_0 = 1 by convention). A nonzero
// stop_degree ends the sweep once the last computed degree exceeds it.
std::vector<long> degree_sequence(const BiMap& f, int n_max, size_t term_cap = 200000,
                                  long stop_degree = 0);

// Irreducible collapsed curves, each verified to collapse by sampling.
std::vector<Poly3> exceptional_locus(const BiMap& f);

// The single image point of s minus the indeterminacy locus (s a line).
PPoint collapse_image(const BiMap& f, const Poly3& s);

BiMap map_inverse(const BiMap& f);

struct FixedPoint {
  PPoint point;
  int period = 1;  // 1 or 2
};
// Affine fixed points from the family closed forms; ExtensionNeeded carries the
// minimal polynomial of the missing radical when the discriminant is not a
// square in the coefficient field. A positive-dimensional fixed locus is
// reported by verified representative points.
std::vector<FixedPoint> fixed_points(const BiMap& f);

Poly3 jacobian_det(const BiMap& f);

}  // namespace birmap
