#include <doctest.h>

#include "birmap/verify.hpp"

// pullback degree law, 100 randomized cases
TEST_CASE("deg pullback = d deg C - sum s_i deg S_i on 100 random cases") {
  std::string log;
  CHECK(birmap::property_pullback_degree_law(100, 1, &log) == 0);
}
