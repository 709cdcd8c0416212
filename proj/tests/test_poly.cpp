#include <doctest.h>

#include "birmap/bimap.hpp"
#include "birmap/poly3.hpp"

using namespace birmap;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
FieldElem qe(long n, long d = 1) { return FieldElem::from_rat(Q(), rat(n, d)); }
Poly3 var(int i) { return Poly3::variable(Q(), i); }
}  // namespace

TEST_CASE("multivariate gcd basics") {
  Poly3 x0 = var(0), x1 = var(1), x2 = var(2);
  CHECK(poly_gcd(x0 * x1, x0 * x2) == x0);
  // (x0^2 - x1^2, x0^2 + 2 x0 x1 + x1^2) -> x0 + x1
  Poly3 a = x0 * x0 - x1 * x1;
  Poly3 b = x0 * x0 + (x0 * x1).scaled(qe(2)) + x1 * x1;
  CHECK(poly_gcd(a, b) == x0 + x1);
}

TEST_CASE("gcd of the squared family components finds the dropped line") {
  BiMap f = make_family_A(qe(1), qe(2), qe(3));
  std::array<Poly3, 3> sq;
  for (int i = 0; i < 3; ++i)
    sq[static_cast<size_t>(i)] = poly_subst(f.comp[static_cast<size_t>(i)], f.comp[0], f.comp[1], f.comp[2]);
  Poly3 g = poly_gcd(poly_gcd(sq[0], sq[1]), sq[2]);
  // proportional to g0 x0 + x2 with g0 = 3
  Poly3 want = Poly3::from_terms(Q(), {{1, 0, 0, qe(3)}, {0, 0, 1, qe(1)}});
  CHECK(g.degree() == 1);
  CHECK(g == want.monic());
}

TEST_CASE("exact division and its witness") {
  Poly3 x0 = var(0), x1 = var(1);
  CHECK(poly_div_exact(x0 * x0 * x1, x0) == x0 * x1);
  CHECK(poly_div_exact(Poly3::zero(Q()), x0).is_zero());
  Poly3 l = Poly3::from_terms(Q(), {{1, 0, 0, qe(3)}, {0, 0, 1, qe(1)}});
  CHECK(poly_div_exact(l * (x0 + x1), l) == x0 + x1);
  CHECK_THROWS_WITH_AS(poly_div_exact(x0 * x0 + x1 * x1, x0), doctest::Contains("NotDivisible"), Error);
  CHECK(!poly_try_div(x0 + x1, x0).has_value());
}

TEST_CASE("substitution follows the induced-map components") {
  BiMap f = make_family_A(qe(1), qe(2), qe(3));
  // x1 substituted by the components is the middle component itself
  CHECK(poly_subst(var(1), f.comp[0], f.comp[1], f.comp[2]) == f.comp[1]);
  // identity components leave a polynomial alone
  Poly3 c = var(0) + var(1) + var(2);
  CHECK(poly_subst(c, var(0), var(1), var(2)) == c);
  // x0 x1 x2 into the standard involution gives (x0 x1 x2)^2
  Poly3 J0 = var(1) * var(2), J1 = var(0) * var(2), J2 = var(0) * var(1);
  Poly3 m = var(0) * var(1) * var(2);
  CHECK(poly_subst(m, J0, J1, J2) == m * m);
  CHECK_THROWS_AS(poly_subst(c, var(0), J1, J2), Error);
}

TEST_CASE("substitution is multiplicative") {
  BiMap f = make_family_A(qe(-1), qe(5, 2), qe(7));
  Poly3 c1 = var(0) * var(0) + var(1) * var(2);
  Poly3 c2 = var(2) + var(0);
  auto sub = [&](const Poly3& c) { return poly_subst(c, f.comp[0], f.comp[1], f.comp[2]); };
  CHECK(sub(c1 * c2) == sub(c1) * sub(c2));
}

TEST_CASE("gcd result divides both arguments with coprime quotients") {
  Poly3 x0 = var(0), x1 = var(1), x2 = var(2);
  Poly3 g = (x0 + x1) * (x0 - x2);
  Poly3 a = g * (x1 + x2);
  Poly3 b2 = g * (x0 + x1.scaled(qe(2)));
  Poly3 got = poly_gcd(a, b2);
  Poly3 qa = poly_div_exact(a, got);
  Poly3 qb = poly_div_exact(b2, got);
  CHECK(poly_gcd(qa, qb).degree() == 0);
  CHECK(got == g.monic());
}
