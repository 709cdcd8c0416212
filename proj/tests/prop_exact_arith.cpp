#include <doctest.h>

#include "birmap/verify.hpp"

// exact-arith laws, 1000 randomized cases (criterion: standalone property suite)
TEST_CASE("field and univariate laws hold on 1000 random cases") {
  std::string log;
  CHECK(birmap::property_exact_arith(1000, 1, &log) == 0);
}
