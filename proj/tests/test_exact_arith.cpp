#include <doctest.h>

#include "birmap/number_field.hpp"
#include "birmap/rat_poly.hpp"

using namespace birmap;

TEST_CASE("rational parsing and canonical form") {
  CHECK(rat_to_string(rat_from_string("6/4")) == "3/2");
  CHECK(rat_to_string(rat_from_string("-6/4")) == "-3/2");
  CHECK(rat_to_string(rat_from_string("7")) == "7");
  CHECK(rat_from_string("0/5") == 0);
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("abc"), Error);
}

TEST_CASE("field inversion in Q") {
  auto f = NumberField::rationals();
  FieldElem a = FieldElem::from_rat(f, rat(3, 4));
  CHECK(a.inv() == FieldElem::from_rat(f, rat(4, 3)));
  CHECK_THROWS_AS(FieldElem::zero(f).inv(), Error);
}

TEST_CASE("field inversion in quadratic and sextic extensions") {
  auto gauss = NumberField::make({Rat(1), Rat(0), Rat(1)});  // a^2 + 1
  FieldElem i = FieldElem::gen(gauss);
  CHECK(i.inv() == -i);

  // a^6 + a^3 + 1: inverse of a is -a^5 - a^2
  auto f9 = NumberField::make({Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)});
  FieldElem a = FieldElem::gen(f9);
  FieldElem want(f9, {Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0), Rat(-1)});
  CHECK(a.inv() == want);
  CHECK((a * a.inv()).is_one());
}

TEST_CASE("reducible modulus is reported, never silently accepted") {
  auto f = NumberField::make({Rat(-1), Rat(0), Rat(1)});  // a^2 - 1 = (a-1)(a+1)
  FieldElem zd = FieldElem::gen(f) - FieldElem::one(f);   // zero divisor
  CHECK_THROWS_WITH_AS(zd.inv(), doctest::Contains("ReducibleModulus"), Error);
}

TEST_CASE("field sqrt over Q and quadratic fields") {
  auto q = NumberField::rationals();
  CHECK(field_sqrt(FieldElem::from_rat(q, rat(9, 4))).has_value());
  CHECK(!field_sqrt(FieldElem::from_rat(q, rat(2))).has_value());
  auto f = NumberField::make({Rat(-2), Rat(0), Rat(1)});  // a^2 = 2
  FieldElem two = FieldElem::from_int(f, 2);
  auto s = field_sqrt(two);
  REQUIRE(s.has_value());
  CHECK((*s) * (*s) == two);
  // 3 + 2 sqrt(2) = (1 + sqrt 2)^2
  FieldElem x(f, {Rat(3), Rat(2)});
  auto sx = field_sqrt(x);
  REQUIRE(sx.has_value());
  CHECK((*sx) * (*sx) == x);
}

TEST_CASE("squarefree decomposition reproduces its input") {
  // x^2 (x+1) (x-1)^2
  RatPoly p = RatPoly::monomial(2, Rat(1)) * RatPoly({Rat(1), Rat(1)}) * RatPoly({Rat(-1), Rat(1)}) *
              RatPoly({Rat(-1), Rat(1)});
  auto d = squarefree_decomp(p);
  REQUIRE(d.size() == 3);
  CHECK(d[0].first == RatPoly({Rat(1), Rat(1)}));  // multiplicity 1: x+1
  CHECK(d[0].second == 1);
  CHECK(d[1].second == 2);
  CHECK(d[2].second == 2);
  RatPoly rebuilt = RatPoly::constant(Rat(1));
  for (auto& [factor, mult] : d)
    for (int i = 0; i < mult; ++i) rebuilt = rebuilt * factor;
  CHECK(rebuilt.monic() == p.monic());

  auto d2 = squarefree_decomp(RatPoly({Rat(-1), Rat(-1), Rat(1)}));
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].second == 1);

  // (x-1)^4 (x+1)^2 (x^2+1) (x^2+x+1): multiplicities 4,2,1,1
  RatPoly xm1({Rat(-1), Rat(1)}), xp1({Rat(1), Rat(1)});
  RatPoly big = xm1.pow(4) * xp1.pow(2) * RatPoly({Rat(1), Rat(0), Rat(1)}) *
                RatPoly({Rat(1), Rat(1), Rat(1)});
  std::vector<int> mults;
  for (auto& [factor, mult] : squarefree_decomp(big)) mults.push_back(mult);
  std::sort(mults.begin(), mults.end());
  CHECK(mults == std::vector<int>{1, 2, 4});
}

TEST_CASE("sturm isolation") {
  RatPoly golden({Rat(-1), Rat(-1), Rat(1)});
  auto ivs = sturm_isolate(golden, Rat(1), Rat(3), rat(1, 1000000000));
  REQUIRE(ivs.size() == 1);
  Rat target = rat_from_string("16180339887/10000000000");
  CHECK(ivs[0].lo <= target);
  CHECK(target <= ivs[0].hi + ivs[0].width());

  CHECK(sturm_isolate(RatPoly({Rat(1), Rat(0), Rat(1)}), Rat(-10), Rat(10), rat(1, 4)).empty());

  RatPoly cube({Rat(0), Rat(-1), Rat(0), Rat(1)});  // x^3 - x
  auto three = sturm_isolate(cube, Rat(-2), Rat(2), rat(1, 8));
  REQUIRE(three.size() == 3);
  CHECK(sturm_count(cube, Rat(-2), Rat(2)) == 3);
}

TEST_CASE("cyclotomic test") {
  CHECK(cyclotomic_test(RatPoly({Rat(1), Rat(1), Rat(1)})) == 3);
  CHECK(!cyclotomic_test(RatPoly({Rat(-1), Rat(-1), Rat(1)})).has_value());
  CHECK(cyclotomic_test(RatPoly({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)})) == 8);
  // exact divisibility witness
  RatPoly x8m1 = RatPoly::monomial(8, Rat(1)) - RatPoly::constant(Rat(1));
  CHECK(RatPoly::divrem(x8m1, RatPoly({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)})).second.is_zero());
}

TEST_CASE("rational roots without factoring") {
  // roots 3/2, -1, 0 of (2x - 3)(x + 1) x
  RatPoly p = RatPoly({Rat(-3), Rat(2)}) * RatPoly({Rat(1), Rat(1)}) * RatPoly::monomial(1, Rat(1));
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == 0);
  CHECK(roots[2] == rat(3, 2));
  CHECK(rational_roots(RatPoly({Rat(-2), Rat(0), Rat(1)})).empty());
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational_between(rat(3, 7), rat(1, 2)) == rat(1, 2));
  CHECK(simplest_rational_between(rat(15, 11), rat(14, 10)) == rat(7, 5));
  CHECK(simplest_rational_between(rat(-1, 3), rat(1, 5)) == 0);
}
