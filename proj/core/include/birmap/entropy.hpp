#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birmap/orbits.hpp"
#include "birmap/rat_poly.hpp"

namespace birmap {

struct OrbitEntry {
  int start = -1;   // A_start
  int tau = -1;     // terminal O_tau
  int length = 0;   // number of orbit elements
};

struct OrbitList {
  std::vector<OrbitEntry> orbits;  // chained: tau of one equals start of the next
  bool closed = false;
  int total_length() const {
    int n = 0;
    for (const auto& o : orbits) n += o.length;
    return n;
  }
};

struct OrbitListSet {
  std::vector<OrbitList> lists;
};

// Maximal chained lists of the SE orbits; closed when the last terminal index
// returns to the first start index.
OrbitListSet build_lists(const SEProfile& profile);

// (T_L, S_L) per the closed/open piecewise table; list sizes 1..3 supported.
std::pair<RatPoly, RatPoly> list_polynomials(const OrbitList& list);

// X(x) = (x-2) prod T_L + (x-1) sum_L S_L prod_{L' != L} T_{L'}
RatPoly char_poly_bk(const OrbitListSet& lists);

struct RecurrenceFit {
  RatPoly annihilator;  // monic, minimal degree for the given data
  bool provisional = false;
};

// Minimal-degree monic annihilator of the finite sequence (needs length >= 4);
// provisional when the fitted order exceeds length/2.
RecurrenceFit fit_recurrence(const std::vector<Rat>& d);
RecurrenceFit fit_recurrence_int(const std::vector<long>& d);

// Isolating interval for the largest real root strictly greater than 1.
std::optional<RatInterval> largest_real_root(const RatPoly& p, const Rat& tol);

struct GrowthClass {
  enum class Kind { Bounded, Linear, Quadratic, Exponential } kind = Kind::Bounded;
  std::optional<int> period;            // Bounded only
  int transient = 0;                    // leading x^v factor of the annihilator
  std::optional<RatInterval> delta;     // Exponential only
  RatPoly delta_factor;                 // squarefree factor carrying delta
  std::optional<std::string> discrepancy;
  std::string name() const;
};

// Trichotomy per the degree-growth theorem, driven by the minimal annihilator of
// the data: real root > 1 => Exponential; otherwise every root must be a root of
// unity (transient x^v factors stripped first) and the growth exponent is the
// maximal multiplicity minus one.
GrowthClass classify_growth(const RatPoly& annihilator, const std::vector<Rat>& d);

struct DynamicalDegreeReport {
  RatPoly char_poly;
  std::optional<RatInterval> delta;  // absent when delta = 1 exactly
  GrowthClass growth;
  RatPoly empirical_annihilator;
  std::vector<long> degrees;  // d_1..d_n as computed
  SEProfile profile;
};

struct DynDegOptions {
  int max_orbit_steps = 64;
  int degree_cap = 64;      // stop extending the empirical sequence past this degree
  int max_terms = 14;       // at most this many empirical degrees
  Rat tol = Rat(1, 1000000000);
  size_t term_cap = 200000;
};

DynamicalDegreeReport dynamical_degree(const BiMap& f, const DynDegOptions& opts = {});

// (k,p)-free helpers for the formula identities
RatPoly bk_formula_one_open_singleton();                 // x^2 - x - 1

}  // namespace birmap
