#include <doctest.h>

#include "birmap/entropy.hpp"

using namespace birmap;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
FieldElem qe(long n, long d = 1) { return FieldElem::from_rat(Q(), rat(n, d)); }

OrbitListSet one_open_singleton() {
  OrbitListSet s;
  s.lists.push_back({{{0, 2, 1}}, false});
  return s;
}
}  // namespace

TEST_CASE("list chaining") {
  // {A0 = O2} alone: one open singleton
  SEProfile prof;
  prof.orbit[0] = {true, 1, 2, {}};
  prof.orbit[1] = {false, 0, -1, {}};
  prof.orbit[2] = {false, 0, -1, {}};
  auto lists = build_lists(prof);
  REQUIRE(lists.lists.size() == 1);
  CHECK(!lists.lists[0].closed);
  CHECK(lists.lists[0].orbits.size() == 1);

  // {A0 = O2, A2 -> O0 of length p+1}: one closed list
  prof.orbit[2] = {true, 3, 0, {}};
  lists = build_lists(prof);
  REQUIRE(lists.lists.size() == 1);
  CHECK(lists.lists[0].closed);
  CHECK(lists.lists[0].orbits.size() == 2);
  CHECK(lists.lists[0].total_length() == 4);

  // adding the closed A1 orbit gives two closed lists
  prof.orbit[1] = {true, 3, 1, {}};
  lists = build_lists(prof);
  CHECK(lists.lists.size() == 2);
  for (const auto& l : lists.lists) CHECK(l.closed);
}

TEST_CASE("list polynomials follow the piecewise table") {
  OrbitList open1{{{0, 2, 1}}, false};
  auto [t1, s1] = list_polynomials(open1);
  CHECK(t1 == RatPoly::monomial(1, Rat(1)));
  CHECK(s1 == RatPoly::constant(Rat(1)));

  OrbitList closed2{{{0, 2, 1}, {2, 0, 2}}, true};  // lengths {1, p+1} with p = 1
  auto [t2, s2] = list_polynomials(closed2);
  CHECK(t2 == RatPoly::monomial(3, Rat(1)) - RatPoly::constant(Rat(1)));
  CHECK(s2 == RatPoly::monomial(1, Rat(1)) + RatPoly::monomial(2, Rat(1)) + RatPoly::constant(Rat(2)));

  OrbitList closed1{{{1, 1, 3}}, true};  // lengths {2k+1} with k = 1
  auto [t3, s3] = list_polynomials(closed1);
  CHECK(t3 == RatPoly::monomial(3, Rat(1)) - RatPoly::constant(Rat(1)));
  CHECK(s3 == RatPoly::constant(Rat(1)));

  OrbitList toobig{{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 1, 1}}, true};
  CHECK_THROWS_AS(list_polynomials(toobig), Error);
}

TEST_CASE("characteristic polynomial closed forms") {
  CHECK(char_poly_bk(one_open_singleton()) == RatPoly({Rat(-1), Rat(-1), Rat(1)}));
  // closed {1, p+1}: x^{p+1}(x^2-x-1) + x^2
  for (int p = 0; p <= 6; ++p) {
    OrbitListSet s;
    s.lists.push_back({{{0, 2, 1}, {2, 0, p + 1}}, true});
    RatPoly want = RatPoly::monomial(p + 1, Rat(1)) * RatPoly({Rat(-1), Rat(-1), Rat(1)}) +
                   RatPoly::monomial(2, Rat(1));
    CHECK(char_poly_bk(s) == want);
  }
  // (k,p) = (1,0): (x^{2k+2}-1)(x-1)(x+1)
  OrbitListSet s;
  s.lists.push_back({{{0, 2, 1}, {2, 0, 1}}, true});
  s.lists.push_back({{{1, 1, 3}}, true});
  RatPoly want = (RatPoly::monomial(4, Rat(1)) - RatPoly::constant(Rat(1))) *
                 RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(1), Rat(1)});
  CHECK(char_poly_bk(s) == want);
}

TEST_CASE("recurrence fitting") {
  auto fit = fit_recurrence_int({1, 2, 2, 3, 3, 4, 4, 5});
  RatPoly want = RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(1), Rat(1)});
  CHECK(fit.annihilator == want);
  CHECK(!fit.provisional);

  CHECK(fit_recurrence_int({1, 1, 1, 1}).annihilator == RatPoly({Rat(-1), Rat(1)}));
  CHECK(fit_recurrence_int({1, 2, 3, 5, 8, 13}).annihilator == RatPoly({Rat(-1), Rat(-1), Rat(1)}));
  CHECK_THROWS_AS(fit_recurrence_int({1, 2, 3}), Error);
}

TEST_CASE("largest real root") {
  auto iv = largest_real_root(RatPoly({Rat(-1), Rat(-1), Rat(1)}), rat(1, 1000000000));
  REQUIRE(iv);
  CHECK(iv->width() <= rat(1, 1000000000));
  Rat approx = rat_from_string("16180339887/10000000000");
  CHECK(abs(iv->midpoint() - approx) < rat(1, 100000000));

  RatPoly lin = RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(1), Rat(1)});
  CHECK(!largest_real_root(lin, rat(1, 1000)).has_value());

  // x^2 (x+1) (x-1)^2 has no root beyond 1
  RatPoly chi2 = RatPoly::monomial(2, Rat(1)) * RatPoly({Rat(1), Rat(1)}) *
                 RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(-1), Rat(1)});
  CHECK(!largest_real_root(chi2, rat(1, 1000)).has_value());
}

TEST_CASE("growth classification") {
  // linear family-B data
  RatPoly annB = RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(1), Rat(1)});
  std::vector<Rat> dB;
  for (long v : {1, 2, 2, 3, 3, 4, 4, 5, 5}) dB.push_back(Rat(v));
  auto g = classify_growth(annB, dB);
  CHECK(g.kind == GrowthClass::Kind::Linear);

  // quadratic: the (x-1)^4 (x+1)^2 (x^2+1)(x^2+x+1) annihilator with the quoted degrees
  RatPoly xm1({Rat(-1), Rat(1)}), xp1({Rat(1), Rat(1)});
  RatPoly annQ = xm1.pow(4) * xp1.pow(2) * RatPoly({Rat(1), Rat(0), Rat(1)}) *
                 RatPoly({Rat(1), Rat(1), Rat(1)});
  std::vector<Rat> dQ;
  for (long v : {1, 2, 3, 5, 7, 11, 15, 20, 25, 32, 39}) dQ.push_back(Rat(v));
  auto g2 = classify_growth(annQ, dQ);
  CHECK(g2.kind == GrowthClass::Kind::Quadratic);

  // bounded with period 2k+2 = 4
  RatPoly chi10 = (RatPoly::monomial(4, Rat(1)) - RatPoly::constant(Rat(1))) * xm1 * xp1;
  std::vector<Rat> dP;
  for (long v : {1, 2, 3, 2, 1, 2, 3, 2, 1}) dP.push_back(Rat(v));
  auto g3 = classify_growth(chi10, dP);
  CHECK(g3.kind == GrowthClass::Kind::Bounded);
  REQUIRE(g3.period);
  CHECK(*g3.period == 4);

  // exponential with golden multiplier
  std::vector<Rat> dE;
  for (long v : {1, 2, 3, 5, 8, 13, 21}) dE.push_back(Rat(v));
  auto g4 = classify_growth(RatPoly({Rat(-1), Rat(-1), Rat(1)}), dE);
  CHECK(g4.kind == GrowthClass::Kind::Exponential);
  CHECK(g4.delta);
}

TEST_CASE("dynamical degree pipeline") {
  BiMap a = make_family_A(qe(1), qe(2), qe(3));
  auto rep = dynamical_degree(a);
  CHECK(rep.char_poly == RatPoly({Rat(-1), Rat(-1), Rat(1)}));
  CHECK(rep.growth.kind == GrowthClass::Kind::Exponential);
  REQUIRE(rep.delta);

  BiMap b = make_family_B(qe(1), qe(1), qe(1));
  auto repb = dynamical_degree(b);
  RatPoly want = RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(-1), Rat(1)}) * RatPoly({Rat(1), Rat(1)});
  CHECK(repb.char_poly == want);
  CHECK(repb.growth.kind == GrowthClass::Kind::Linear);
  CHECK(!repb.delta);

  // p = 1 with a1 = 2 is bounded
  BiMap p1 = make_family_A(qe(7, 18), qe(2), qe(1, 3));
  auto rep1 = dynamical_degree(p1);
  CHECK(rep1.growth.kind == GrowthClass::Kind::Bounded);

  // empirical annihilator divides the charpoly
  auto [q, r] = RatPoly::divrem(repb.char_poly, repb.empirical_annihilator);
  CHECK(r.is_zero());
}
