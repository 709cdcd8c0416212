#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birmap/bimap.hpp"

namespace birmap {

// V(x,y) = P(x,y)/Q(x,y), affine bivariate polynomials over one field,
// gcd(P,Q) constant, Q != 0.
struct Fibration {
  Poly3 P, Q;
};
Fibration make_fibration(Poly3 p, Poly3 q);

// psi(k) = (w1 k + w2)/(w3 k + w4), w1 w4 - w2 w3 != 0.
struct Mobius {
  FieldElem w1, w2, w3, w4;
  bool is_diagonal() const { return w2.is_zero() && w3.is_zero(); }
  bool is_identity_like() const;  // proportional to the identity
  FieldElem det() const { return w1 * w4 - w2 * w3; }
};
Mobius mobius_identity(const FieldPtr& f);
Mobius mobius_scale(const FieldElem& lambda);
Mobius mobius_compose(const Mobius& a, const Mobius& b);

struct PullbackResult {
  Poly3 proper;             // the proper-transform polynomial
  std::vector<int> mults;   // exceptional multiplicities s_i in locus order
  int cancelled_degree = 0;
};
// C∘F = prod S_i^{s_i} * proper with each s_i maximal (C homogeneous).
PullbackResult curve_pullback(const BiMap& f, const Poly3& curve);

struct EigenCurve {
  Poly3 curve;  // homogeneous, monic under graded-lex
  FieldElem eigenvalue;
};
struct CurveSearchResult {
  std::vector<EigenCurve> curves;
  std::vector<std::string> needs_extension;  // pencil factors with no root in the field
};
// Invariant curves of degree D as eigenvectors of the constrained pullback
// operator, one multiplicity profile at a time.
CurveSearchResult search_invariant_curves(const BiMap& f, int D);

// Exact identity P(f)(w3 P + w4 Q) = (w1 P + w2 Q) Q(f) after clearing the
// denominators of f symbolically.
bool check_fibration(const BiMap& f, const Fibration& v, const Mobius& psi);

// The Möbius psi (up to scalar) making check_fibration true, by solving the
// linear system in (w1..w4); nullopt when only the zero solution exists.
std::optional<Mobius> find_mobius(const BiMap& f, const Fibration& v);

// W∘f = W as an exact identity.
bool check_first_integral(const BiMap& f, const Fibration& w);

struct FirstIntegralCert {
  Fibration base;
  Mobius psi;
  int order = 1;
  bool power_form = false;  // W = V^order (diagonal psi); else orbit product
};
struct FirstIntegral {
  Fibration w;
  std::optional<FirstIntegralCert> cert;
};
// Certificate route for large powers: W = V^m exactly + check_fibration + psi^m = id
// is an exact proof of W∘f = W without expanding the degree-m identity.
bool check_first_integral(const BiMap& f, const FirstIntegral& w);

enum class IntegralStyle { Auto, Power, OrbitProduct };
FirstIntegral build_first_integral(const BiMap& f, const Fibration& v, const Mobius& psi, int order,
                                   IntegralStyle style = IntegralStyle::Auto);

// Minimal n <= n_max with the reduced F^n projectively equal to the identity.
std::optional<int> check_periodicity(const BiMap& f, int n_max, size_t term_cap = 200000);

// Jacobian determinant of (V1, V2), denominators cleared, not identically zero.
bool transversality_check(const Fibration& v1, const Fibration& v2);

// psi applied to a field value (w3 k + w4 != 0).
FieldElem mobius_apply(const Mobius& m, const FieldElem& k);

}  // namespace birmap
