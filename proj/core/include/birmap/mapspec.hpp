#pragma once

#include <string>

#include "birmap/classifier.hpp"
#include "birmap/fibration.hpp"

namespace birmap {

// Map spec JSON:
//   {"field": {"modulus": ["m0", ..., "1"]},       optional, lowest-first; Q if absent
//    "family": "A" | "B" | "raw",
//    "params": {"alpha0": .., "alpha1": .., "gamma0"|"beta2": ..},   families
//    "components": [[[e0,e1,e2,"coeff"], ...] x3],                   raw
//    "inverse":    same shape as components,                         optional
//    "indeterminacy": [["c0","c1","c2"], ...],                       optional (raw)
//    "exceptional": [[[e0,e1,e2,"coeff"], ...], ...]}                optional (raw)
// Field elements serialize as "n/d" over Q and "[c0, c1, ...]" over extensions.
// Unknown keys are rejected.
struct MapSpec {
  FieldPtr field;
  BiMap map;
  std::string family;  // "A", "B", "raw"
};

MapSpec parse_map_spec(const std::string& text);
std::string map_spec_to_json(const BiMap& map);

// Fibration spec JSON: {"P": [[ex,ey,"coeff"],...], "Q": [...],
//                       "mobius": ["w1","w2","w3","w4"]}   (mobius optional)
struct FibrationSpec {
  Fibration fib;
  std::optional<Mobius> psi;
};
FibrationSpec parse_fibration_spec(const std::string& text, const FieldPtr& field);
std::string fibration_spec_to_json(const Fibration& fib, const std::optional<Mobius>& psi);

std::string catalog_to_json();

// Round-trip helpers used by fixtures and tests.
FieldElem field_elem_from_string(const FieldPtr& f, const std::string& s);

}  // namespace birmap
