#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "birmap/jets.hpp"

namespace birmap {

struct OrbitTerminal {
  enum class Kind { Reached, Truncated, Collapsed } kind = Kind::Truncated;
  int reached_index = -1;   // which O_j, for Reached
  std::string note;         // collapse reason / cycle note
};

struct OrbitRecord {
  int start = -1;  // which A_i
  std::vector<JetPoint> points;
  OrbitTerminal terminal;
  bool se() const { return terminal.kind == OrbitTerminal::Kind::Reached; }
  int length() const { return static_cast<int>(points.size()); }
};

// Orbit of A_start under the induced map until an indeterminacy point of the
// current induced map is reached, the step cap fires, or the jet degenerates.
// The registry is grown per the blow-up scheme: A_0 always (and A_1 = O_1 for
// family B); the A_1-orbit fibers when condition k holds.
OrbitRecord track_orbit(const BiMap& f, int start, int max_steps = 64, int jet_order = 6);

struct OrbitSummary {
  bool se = false;
  int length = 0;
  int tau = -1;  // terminal indeterminacy index
  OrbitRecord record;
};

struct SEProfile {
  std::array<OrbitSummary, 3> orbit;
  std::optional<int> k;  // condition-k index when the A_1 orbit is SE
  std::optional<int> p;  // A_2-orbit exponent when SE
  BlowupRegistry registry;
};

SEProfile se_profile(const BiMap& f, int max_steps = 64);

// Low-level variant used by se_profile and tests: explicit registry and the
// indeterminacy indices still present on the blown-up surface.
OrbitRecord track_orbit_with(const BiMap& f, const PPoint& start, int start_index,
                             const BlowupRegistry& reg, const std::vector<int>& remaining_indet,
                             int max_steps, int jet_order);

}  // namespace birmap
