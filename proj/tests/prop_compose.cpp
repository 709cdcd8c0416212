#include <doctest.h>

#include "birmap/verify.hpp"

// composition/evaluation consistency, 200 randomized cases
TEST_CASE("composition commutes with evaluation on 200 random cases") {
  std::string log;
  CHECK(birmap::property_compose_evaluate(200, 1, &log) == 0);
}
