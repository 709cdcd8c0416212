#include <doctest.h>

#include "birmap/orbits.hpp"

using namespace birmap;

namespace {
FieldPtr Q() { return NumberField::rationals(); }
FieldElem qe(long n, long d = 1) { return FieldElem::from_rat(Q(), rat(n, d)); }
}  // namespace

TEST_CASE("the A1 orbit alternates base points and fiber points") {
  BiMap f = make_family_A(qe(1), qe(2), qe(3));
  OrbitRecord orb = track_orbit(f, 1, 12);
  REQUIRE(orb.points.size() >= 9);
  // first step lands on [1:0] over A0
  const JetPoint& e0 = orb.points[1];
  CHECK(e0.depth == 1);
  CHECK(e0.label == "E0");
  REQUIRE(e0.dir1);
  CHECK(e0.dir1->u.is_one());
  CHECK(e0.dir1->v.is_zero());
  // second step: [0 : a1 g0 : 1]
  CHECK(orb.points[2].depth == 0);
  CHECK(orb.points[2].center == PPoint(qe(0), qe(6), qe(1)));
  // depths alternate 0,1,0,1,...
  for (size_t i = 0; i < orb.points.size(); ++i) CHECK(orb.points[i].depth == int(i % 2));
}

TEST_CASE("even iterates match the geometric-sum closed form") {
  FieldElem a1 = qe(2), g0 = qe(3);
  BiMap f = make_family_A(qe(1), a1, g0);
  OrbitRecord orb = track_orbit(f, 1, 12);
  FieldElem sum = FieldElem::zero(Q()), pw = FieldElem::one(Q());
  for (int k = 1; k <= 4; ++k) {
    sum += pw;
    pw = pw * a1;
    CHECK(orb.points[size_t(2 * k)].center == PPoint(qe(0), a1 * g0 * sum, qe(1)));
  }
}

TEST_CASE("fiber_direction_image agrees with jet evaluation") {
  BiMap f = make_family_A(qe(1), qe(2), qe(3));
  BlowupRegistry reg;
  reg.add("E0", (*f.inv_indeterminacy)[0]);
  JetPoint a1 = start_jet(f, (*f.inv_indeterminacy)[1], reg, 6);
  JetPoint via_jet = jet_evaluate(f, a1, reg);
  JetPoint via_formula = fiber_direction_image(f, a1, reg);
  CHECK(via_jet.depth == 1);
  CHECK(via_formula.depth == 1);
  CHECK(via_jet.center == via_formula.center);
  REQUIRE(via_jet.dir1);
  REQUIRE(via_formula.dir1);
  CHECK(*via_jet.dir1 == *via_formula.dir1);

  JetPoint off_curve = start_jet(f, PPoint::affine(qe(5), qe(7)), reg, 6);
  CHECK_THROWS_AS(fiber_direction_image(f, off_curve, reg), Error);
}

TEST_CASE("collision tower reproduces the quoted two-level trace") {
  // a1 = -1, g0 = -1: A2 -> [1:0]_G0 -> (G1, depth 2) -> [1:-a0]_G2 -> O0
  FieldElem a0 = qe(2);
  BiMap f = make_family_A(a0, qe(-1), qe(-1));
  SEProfile prof = se_profile(f, 16);
  REQUIRE(prof.p);
  CHECK(*prof.p == 4);
  REQUIRE(prof.k);
  CHECK(*prof.k == 1);
  const auto& pts = prof.orbit[2].record.points;
  REQUIRE(pts.size() == 5);
  CHECK(pts[1].depth == 1);
  CHECK(pts[1].label == "G0");
  CHECK(pts[1].dir1->u.is_one());
  CHECK(pts[1].dir1->v.is_zero());
  CHECK(pts[2].depth == 2);
  CHECK(pts[2].label == "G1");
  CHECK(pts[3].depth == 1);
  CHECK(pts[3].label == "G2");
  CHECK(pts[3].dir1->u.is_one());
  CHECK(pts[3].dir1->v == -a0);
  CHECK(pts[4].depth == 0);
  CHECK(pts[4].center == PPoint(qe(1), qe(0), qe(1)));  // O0 at g0 = -1
  CHECK(prof.orbit[2].se);
}

TEST_CASE("family B fibers: S0 -> E0 -> S0") {
  BiMap f = make_family_B(qe(1), qe(1), qe(1));
  BlowupRegistry reg;
  reg.add("E0", (*f.inv_indeterminacy)[0]);
  reg.add("E1", (*f.inv_indeterminacy)[1]);
  JetPoint s0pt = start_jet(f, PPoint(qe(0), qe(2), qe(1)), reg, 6);
  JetPoint on_e0 = jet_evaluate(f, s0pt, reg);
  CHECK(on_e0.depth == 1);
  CHECK(on_e0.label == "E0");
  JetPoint back = jet_evaluate(f, on_e0, reg);
  CHECK(back.depth == 0);
  CHECK(back.center[0].is_zero());  // back on S0
}

TEST_CASE("untracked generic orbits truncate honestly") {
  BiMap f = make_family_A(qe(1), qe(2), qe(3));
  OrbitRecord orb = track_orbit(f, 2, 64);
  CHECK(orb.terminal.kind == OrbitTerminal::Kind::Truncated);
}

TEST_CASE("profile shapes for the quoted cases") {
  // A2 = O0 <=> a0 = g0 = 1/a1: orbit of A2 has length 1
  BiMap p0 = make_family_A(qe(1, 2), qe(2), qe(1, 2));
  SEProfile prof = se_profile(p0, 16);
  CHECK(prof.orbit[0].se);
  CHECK(prof.orbit[0].length == 1);
  CHECK(prof.orbit[2].se);
  CHECK(prof.orbit[2].length == 1);
  CHECK(prof.orbit[2].tau == 0);
  CHECK(!prof.orbit[1].se);

  // F(A2) = O0 at a1 = 2: orbit length 2
  BiMap p1 = make_family_A(qe(7, 18), qe(2), qe(1, 3));
  SEProfile prof1 = se_profile(p1, 16);
  CHECK(prof1.orbit[2].se);
  CHECK(prof1.orbit[2].length == 2);

  // family B (1,1,1): A0 and A1 SE, A2 not
  BiMap b = make_family_B(qe(1), qe(1), qe(1));
  SEProfile profb = se_profile(b, 32);
  CHECK(profb.orbit[0].se);
  CHECK(profb.orbit[1].se);
  CHECK(profb.orbit[1].tau == 1);
  CHECK(!profb.orbit[2].se);
}
