#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "birmap/entropy.hpp"
#include "birmap/fibration.hpp"

namespace birmap {

// a1^2 g0 (1 + a1 + ... + a1^{k-1}) + 1 = 0, evaluated exactly.
bool condition_k(const FieldElem& a1, const FieldElem& g0, int k);

// Minimal p with the A2-orbit reaching O0 under the induced map.
std::optional<int> find_p_A(const BiMap& f, int p_max);

// Minimal p with the affine orbit of (a0, b2) reaching (0,0); iteration halts
// when the y-coordinate vanishes first.
std::optional<int> find_p_B(const FieldElem& a0, const FieldElem& b2, const FieldElem& a1, int p_max);

struct CaseLabel {
  FamilyTag family = FamilyTag::Raw;
  std::optional<int> k, p;
  GrowthClass growth;
  // structural id of the zero-entropy case ("p0", "p1", "p2", "k1p3",
  // "k2p3-a/b", "k1p4-a..d", "b-generic", "b-periodic", "b-origin"); empty for
  // exponential maps
  std::string case_id;
  DynamicalDegreeReport report;
};

CaseLabel classify_map(const BiMap& f, int k_max = 16, int p_max = 32);

// One fibration claim attached to a catalog entry, self-contained: the map is
// rebuilt over the fibration's own field (which may extend the entry field by
// a square root).
struct FibrationCheck {
  std::string name;
  BiMap map;
  Fibration fib;
  std::optional<Mobius> psi;              // V-type claims
  std::optional<FirstIntegral> integral;  // W-type claims (psi = id)
};

struct TransversePair {
  std::string first, second;  // names of FibrationCheck entries
};

struct CatalogEntry {
  std::string id;
  std::string description;
  char family = 'A';
  std::vector<std::string> modulus;      // lowest-first rational strings; empty = Q
  std::vector<std::string> params;       // a0,a1,g0 (A) or a0,a1,b2 (B)
  std::vector<std::string> constraints;  // defining parameter relations, as text
  GrowthClass::Kind expected_growth = GrowthClass::Kind::Bounded;
  std::optional<int> expected_seq_period;
  std::optional<int> expected_map_period;
  std::optional<int> k, p;
  std::vector<std::string> fixture_files;  // shipped fibration fixtures

  BiMap make() const;
  FieldPtr make_field() const;
  std::vector<FibrationCheck> fibration_checks() const;
  std::vector<TransversePair> transverse_pairs() const;
};

// Machine-readable descriptors of every zero-entropy case, with concrete
// representatives and their invariant-fibration data.
const std::vector<CatalogEntry>& zero_entropy_catalog();

const CatalogEntry& catalog_entry(const std::string& id);

}  // namespace birmap
