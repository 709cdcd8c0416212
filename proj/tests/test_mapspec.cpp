#include <doctest.h>

#include "birmap/mapspec.hpp"

using namespace birmap;

TEST_CASE("family map specs parse") {
  auto spec = parse_map_spec(R"({"family":"A","params":{"alpha0":"1","alpha1":"2","gamma0":"3"}})");
  CHECK(spec.map.tag == FamilyTag::A);
  CHECK(spec.map.degree == 2);
  CHECK(spec.map.param(1) == FieldElem::from_int(spec.field, 2));

  auto b = parse_map_spec(R"({"family":"B","params":{"alpha0":"-1","alpha1":"-1","beta2":"1"}})");
  CHECK(b.map.tag == FamilyTag::B);
}

TEST_CASE("number-field map specs parse") {
  // the 18-periodic member over the sextic extension
  auto spec = parse_map_spec(R"({
    "field": {"modulus": ["1","0","0","1","0","0","1"]},
    "family": "A",
    "params": {"alpha0": "[0,-1,-1,1,0,-2]", "alpha1": "[0,1]", "gamma0": "[0,1,0,0,1]"}
  })");
  CHECK(spec.field->degree() == 6);
  FieldElem a = FieldElem::gen(spec.field);
  CHECK(spec.map.param(1) == a);
  CHECK(spec.map.param(2) == a + a.pow(4));
}

TEST_CASE("validation failures") {
  CHECK_THROWS_AS(parse_map_spec(R"({"family":"A","params":{"alpha0":"1","alpha1":"0","gamma0":"3"}})"),
                  Error);
  CHECK_THROWS_AS(parse_map_spec(R"({"family":"A","params":{"alpha0":"1","alpha1":"2","gamma0":"3"},"extra":1})"),
                  Error);
  CHECK_THROWS_AS(parse_map_spec(R"({"family":"C","params":{}})"), Error);
  CHECK_THROWS_AS(parse_map_spec("not json"), Error);
  CHECK_THROWS_AS(parse_map_spec(R"({"family":"raw","components":[[[1,0,0,"1"]],[[0,1,0,"1"]]]})"),
                  Error);
}

TEST_CASE("emit-parse round trip is the identity") {
  auto spec = parse_map_spec(R"({"family":"A","params":{"alpha0":"1/2","alpha1":"2","gamma0":"1/2"}})");
  auto again = parse_map_spec(map_spec_to_json(spec.map));
  CHECK(again.map.comp[0] == spec.map.comp[0]);
  CHECK(again.map.comp[1] == spec.map.comp[1]);
  CHECK(again.map.comp[2] == spec.map.comp[2]);
  CHECK(map_spec_to_json(again.map) == map_spec_to_json(spec.map));

  // raw maps round-trip through components
  auto raw = parse_map_spec(R"({
    "family": "raw",
    "components": [[[0,1,1,"1"]], [[1,0,1,"1"]], [[1,1,0,"1"]]],
    "inverse": [[[0,1,1,"1"]], [[1,0,1,"1"]], [[1,1,0,"1"]]]
  })");
  CHECK(raw.map.degree == 2);
  auto raw2 = parse_map_spec(map_spec_to_json(raw.map));
  CHECK(map_spec_to_json(raw2.map) == map_spec_to_json(raw.map));
}

TEST_CASE("fibration specs round trip") {
  auto field = NumberField::rationals();
  auto fs = parse_fibration_spec(
      R"({"P": [[1,0,"1"],[0,2,"-2"]], "Q": [[0,1,"1"]], "mobius": ["-1","0","0","1"]})", field);
  REQUIRE(fs.psi);
  CHECK(fs.psi->w1 == FieldElem::from_int(field, -1));
  auto fs2 = parse_fibration_spec(fibration_spec_to_json(fs.fib, fs.psi), field);
  CHECK(fs2.fib.P == fs.fib.P);
  CHECK(fs2.fib.Q == fs.fib.Q);
  CHECK(fibration_spec_to_json(fs2.fib, fs2.psi) == fibration_spec_to_json(fs.fib, fs.psi));
}

TEST_CASE("catalog serialization is stable") {
  std::string one = catalog_to_json();
  std::string two = catalog_to_json();
  CHECK(one == two);
  CHECK(one.find("k1p3") != std::string::npos);
}
