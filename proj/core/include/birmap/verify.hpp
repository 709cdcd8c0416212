#pragma once

#include <functional>
#include <string>
#include <vector>

#include "birmap/classifier.hpp"

namespace birmap {

struct VerifyResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  uint64_t seed = 1;
  bool include_property_suites = true;
  std::function<void(const VerifyResult&)> on_result;  // streamed as each check finishes
};

// The acceptance suite: every criterion at its stated tolerance, one result per
// criterion (plus sub-results where a criterion covers a family of checks).
std::vector<VerifyResult> run_acceptance(const VerifyOptions& opts = {});

// Property suites, runnable standalone: return failure count.
int property_exact_arith(int cases, uint64_t seed, std::string* log = nullptr);
int property_compose_evaluate(int cases, uint64_t seed, std::string* log = nullptr);
int property_pullback_degree_law(int cases, uint64_t seed, std::string* log = nullptr);

// Deterministic small-rational stream shared by the property suites.
struct RatStream {
  uint64_t state;
  explicit RatStream(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  uint64_t next_u64();
  long next_int(long lo, long hi);
  Rat next_rat(long num_range = 9, long den_range = 4);
  FieldElem next_elem(const FieldPtr& f, long range = 9);
};

}  // namespace birmap
