#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <fstream>
#include <sstream>

#include "birmap/mapspec.hpp"

// The shipped fixtures must parse back to exactly the data the catalog builds,
// and every (V, psi) file must verify against its map file.

using namespace birmap;

static std::string g_fixture_dir;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing fixture ", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
}  // namespace

TEST_CASE("every shipped fibration fixture verifies against its map") {
  for (const auto& e : zero_entropy_catalog()) {
    auto checks = e.fibration_checks();
    for (const auto& c : checks) {
      std::string path = g_fixture_dir + "/fibrations/" + e.id + "__" + c.name + ".json";
      INFO(path);
      auto fs = parse_fibration_spec(slurp(path), c.map.field);
      CHECK(fs.fib.P == (c.psi ? c.fib.P : c.integral->w.P));
      CHECK(fs.fib.Q == (c.psi ? c.fib.Q : c.integral->w.Q));
      if (c.psi) {
        REQUIRE(fs.psi);
        CHECK(check_fibration(c.map, fs.fib, *fs.psi));
      } else {
        REQUIRE(fs.psi);  // identity for first integrals
        CHECK(fs.psi->is_identity_like());
      }
    }
    std::string mpath = g_fixture_dir + "/maps/" + e.id + ".json";
    auto spec = parse_map_spec(slurp(mpath));
    BiMap want = e.make();
    CHECK(spec.map.comp[0] == want.comp[0]);
    CHECK(spec.map.comp[1] == want.comp[1]);
    CHECK(spec.map.comp[2] == want.comp[2]);
  }
}

TEST_CASE("catalog json matches the shipped copy") {
  std::string shipped = slurp(g_fixture_dir + "/catalog.json");
  CHECK(shipped == catalog_to_json());
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  g_fixture_dir = argc > 1 ? argv[argc - 1] : "fixtures";
  // keep doctest from interpreting the fixture path
  ctx.applyCommandLine(argc > 1 ? argc - 1 : argc, argv);
  return ctx.run();
}
