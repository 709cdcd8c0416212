#include <doctest.h>

#include "birmap/classifier.hpp"
#include "birmap/fibration.hpp"

using namespace birmap;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
FieldElem qe(long n, long d = 1) { return FieldElem::from_rat(Q(), rat(n, d)); }
Poly3 ap(std::vector<std::tuple<int, int, long>> t) {
  std::vector<std::tuple<int, int, FieldElem>> terms;
  for (auto [ex, ey, c] : t) terms.emplace_back(ex, ey, qe(c));
  return apoly_from_terms(Q(), std::move(terms));
}
}  // namespace

TEST_CASE("curve pullback and the degree law") {
  // f = (x+y, x/(y-1)) cycles {x=0} -> {y=0} -> {x+y=0} -> {x=0}: the cubic
  // x y (x+y) pulls back to itself times the exceptional product
  BiMap f = make_family_A(qe(0), qe(1), qe(-1));
  Poly3 cubic = (ap({{1, 0, 1}}) * ap({{0, 1, 1}}) * ap({{1, 0, 1}, {0, 1, 1}})).homogenized(3);
  auto pb = curve_pullback(f, cubic);
  CHECK(pb.proper.degree() == 3);
  CHECK(pb.proper.monic() == cubic.monic());
  int total = 0;
  for (size_t i = 0; i < pb.mults.size(); ++i) total += pb.mults[i];
  CHECK(pb.proper.degree() == f.degree * 3 - total);

  // an exceptional line pulls back to a fully exceptional product
  auto locus = exceptional_locus(f);
  auto pb2 = curve_pullback(f, locus[0]);
  CHECK(pb2.proper.degree() == 0);
}

TEST_CASE("invariant-curve search finds the quoted members") {
  // the rational (k,p) = (2,3) member has the invariant conic -4y^2 + 4x + 1
  BiMap m = catalog_entry("k2p3-b").make();
  auto res = search_invariant_curves(m, 2);
  Poly3 conic = ap({{0, 2, -4}, {1, 0, 4}, {0, 0, 1}}).homogenized(2);
  bool found = false;
  for (const auto& ec : res.curves) found = found || ec.curve == conic.monic();
  CHECK(found);

  // the collision member carries a pencil: cubic and line component together
  BiMap a = catalog_entry("k1p4-a").make();
  auto res3 = search_invariant_curves(a, 3);
  Poly3 want = ap({{1, 1, 2}, {2, 1, -1}, {1, 2, 1}}).homogenized(3);  // a0 x y - x^2 y + x y^2
  Poly3 line = ap({{0, 1, 1}, {0, 0, -1}}).homogenized(3);             // (y - 1) x0^2
  int hits = 0;
  for (const auto& ec : res3.curves) {
    if (ec.curve == want.monic()) ++hits;
    if (ec.curve == line.monic()) ++hits;
  }
  CHECK(hits == 2);

  // identity map: the operator is the identity, every curve eigenvalue 1
  BiMap id = make_identity(Q());
  auto resid = search_invariant_curves(id, 2);
  CHECK(resid.curves.size() == 6);
  for (const auto& ec : resid.curves) CHECK(ec.eigenvalue.is_one());
}

TEST_CASE("fibration checks on the integrable p0 member") {
  BiMap m = catalog_entry("p0-int").make();  // (1 + x + y, x/(1 + y))
  Fibration v1 = make_fibration(ap({{0, 0, 1}, {1, 0, -2}, {0, 1, 3}, {0, 2, 2}}),
                                ap({{0, 0, 1}, {0, 1, 1}}));
  Mobius minus{qe(-1), qe(0), qe(0), qe(1)};
  CHECK(check_fibration(m, v1, minus));
  CHECK(!check_fibration(m, v1, mobius_identity(Q())));

  auto psi = find_mobius(m, v1);
  REQUIRE(psi);
  CHECK(psi->w1 == qe(-1));
  CHECK(psi->w2.is_zero());

  Fibration v2 = make_fibration(ap({{0, 0, 1}, {1, 0, 2}, {0, 1, 3}, {0, 2, 2}}),
                                ap({{0, 0, 2}, {0, 1, 2}}));
  auto psi2 = find_mobius(m, v2);
  REQUIRE(psi2);
  CHECK(psi2->w1.is_one());
  CHECK(psi2->w2.is_one());  // t + 1

  // W = V1^2 is a first integral, directly and through the certificate
  auto w = build_first_integral(m, v1, minus, 2);
  CHECK(check_first_integral(m, w));
  CHECK(check_first_integral(m, w.w));
  // constants are first integrals
  CHECK(check_first_integral(m, make_fibration(ap({{0, 0, 7}}), ap({{0, 0, 3}}))));
}

TEST_CASE("mobius recovery on family B") {
  BiMap b = make_family_B(qe(1), qe(1), qe(1));
  Fibration vx = make_fibration(ap({{1, 0, 1}}), ap({{0, 0, 1}}));
  auto psi = find_mobius(b, vx);
  REQUIRE(psi);
  CHECK(psi->w1 == qe(1));
  CHECK(psi->w2 == qe(1));
  CHECK(psi->w3.is_zero());
  // x h(x) is a first integral when h has order two
  BiMap b2 = make_family_B(qe(1), qe(-1), qe(1));
  Fibration w = make_fibration(ap({{1, 0, 1}, {2, 0, -1}}), ap({{0, 0, 1}}));
  CHECK(check_first_integral(b2, w));
}

TEST_CASE("degenerate mobius spaces are reported") {
  BiMap id = make_identity(Q());
  Fibration v = make_fibration(ap({{1, 0, 1}}), ap({{0, 0, 1}}));
  CHECK_THROWS_AS(find_mobius(id, v), Error);  // every psi fixes V: dimension > 1
}

TEST_CASE("build_first_integral rejects infinite order") {
  BiMap m = catalog_entry("p0-int").make();
  Fibration v2 = make_fibration(ap({{0, 0, 1}, {1, 0, 2}, {0, 1, 3}, {0, 2, 2}}),
                                ap({{0, 0, 2}, {0, 1, 2}}));
  Mobius shift{qe(1), qe(1), qe(0), qe(1)};
  CHECK_THROWS_AS(build_first_integral(m, v2, shift, 4), Error);
  // psi = id gives W = V itself
  Fibration v1 = make_fibration(ap({{0, 0, 1}, {1, 0, -2}, {0, 1, 3}, {0, 2, 2}}),
                                ap({{0, 0, 1}, {0, 1, 1}}));
  Mobius minus{qe(-1), qe(0), qe(0), qe(1)};
  auto w1 = build_first_integral(m, v1, minus, 2);
  auto direct = build_first_integral(m, make_fibration(w1.w.P, w1.w.Q), mobius_identity(Q()), 1);
  CHECK(direct.w.P == w1.w.P);
}

TEST_CASE("periodicity by direct composition") {
  CHECK(check_periodicity(make_identity(Q()), 3) == 1);
  BiMap b = catalog_entry("b-periodic").make();
  CHECK(check_periodicity(b, 8) == 4);
  BiMap lin = make_family_B(qe(1), qe(1), qe(1));
  CHECK(!check_periodicity(lin, 8).has_value());
}

TEST_CASE("transversality") {
  Fibration v = make_fibration(ap({{1, 0, 1}, {0, 2, 1}}), ap({{0, 1, 1}}));
  CHECK(!transversality_check(v, v));
  Fibration v2 = make_fibration(v.P * v.P, v.Q * v.Q);  // V^2 depends on V
  CHECK(!transversality_check(v, v2));
  Fibration w = make_fibration(ap({{0, 1, 1}}), ap({{0, 0, 1}}));
  CHECK(transversality_check(v, w));
}

TEST_CASE("pointwise consistency of a verified fibration") {
  BiMap m = catalog_entry("p0-int").make();
  Fibration v1 = make_fibration(ap({{0, 0, 1}, {1, 0, -2}, {0, 1, 3}, {0, 2, 2}}),
                                ap({{0, 0, 1}, {0, 1, 1}}));
  Mobius minus{qe(-1), qe(0), qe(0), qe(1)};
  int checked = 0;
  for (long ix = -3; ix <= 3 && checked < 20; ++ix)
    for (long iy = -3; iy <= 3 && checked < 20; ++iy) {
      FieldElem x = qe(ix), y = qe(2 * iy + 1, 3);
      PPoint p = PPoint::affine(x, y);
      auto img = map_evaluate(m, p);
      if (!img || (*img)[0].is_zero()) continue;
      FieldElem den = v1.Q.eval_xy(x, y);
      if (den.is_zero()) continue;
      FieldElem vx = v1.P.eval_xy(x, y) / den;
      FieldElem ix2 = (*img)[1] / (*img)[0], iy2 = (*img)[2] / (*img)[0];
      FieldElem den2 = v1.Q.eval_xy(ix2, iy2);
      if (den2.is_zero()) continue;
      FieldElem vfx = v1.P.eval_xy(ix2, iy2) / den2;
      CHECK(vfx == mobius_apply(minus, vx));
      ++checked;
    }
  CHECK(checked == 20);
}
