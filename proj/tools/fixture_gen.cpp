#include <filesystem>
#include <fstream>
#include <iostream>

#include "birmap/mapspec.hpp"

// Regenerates the shipped fixture tree from the catalog builders.

using namespace birmap;

int main(int argc, char** argv) {
  std::filesystem::path root = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(root / "maps");
  std::filesystem::create_directories(root / "fibrations");
  for (const auto& e : zero_entropy_catalog()) {
    {
      std::ofstream out(root / "maps" / (e.id + ".json"));
      out << map_spec_to_json(e.make()) << "\n";
    }
    for (const auto& c : e.fibration_checks()) {
      std::ofstream out(root / "fibrations" / (e.id + "__" + c.name + ".json"));
      if (c.psi) out << fibration_spec_to_json(c.fib, c.psi) << "\n";
      else out << fibration_spec_to_json(c.integral->w, mobius_identity(c.map.field)) << "\n";
    }
    std::cerr << "wrote " << e.id << "\n";
  }
  std::ofstream cat(root / "catalog.json");
  cat << catalog_to_json() << "\n";
  return 0;
}
