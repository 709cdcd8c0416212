#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birmap/bimap.hpp"

namespace birmap {

// Truncated power series in the germ parameter t, coefficients in the map's field.
struct Series {
  FieldPtr field;
  std::vector<FieldElem> c;  // c[0..J]

  static Series make(const FieldPtr& f, int order);
  static Series line(const FieldPtr& f, int order, const FieldElem& at, const FieldElem& dir);
  int order() const { return static_cast<int>(c.size()) - 1; }
  int valuation() const;  // order()+1 when identically zero to truncation
  bool is_zero_to_order() const { return valuation() > order(); }
  const FieldElem& at0() const { return c[0]; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series scaled(const FieldElem& a) const;
  Series shifted_down(int k) const;          // divide by t^k (valuation >= k)
  static Series divide(const Series& a, const Series& b);  // b.at0() != 0
};

// Canonical P^1 direction [u : v], first nonzero scaled to 1.
struct FiberDir {
  FieldElem u, v;
  bool operator==(const FiberDir& o) const { return u == o.u && v == o.v; }
  std::string to_string() const { return "[" + u.to_string() + " : " + v.to_string() + "]"; }
};
FiberDir make_dir(const FieldElem& u, const FieldElem& v);

// A point of P^2 or an infinitesimal point above a blow-up center, carried as a
// truncated curve germ in the canonical affine chart of its center.
// depth 0: ordinary point; depth 1: point on the fiber over a registered base
// center; depth 2: point on a fiber over a registered fiber point.
struct JetPoint {
  int chart = 0;
  Series u, v;
  PPoint center;
  int depth = 0;
  std::optional<FiberDir> dir1, dir2;
  std::string label;
  // truncation orders consumed by valuation shifts so far; coefficients above
  // order() - spent are no longer trustworthy
  int spent = 0;

  bool same_place(const JetPoint& o) const;  // center + directions (jets beyond are not identity)
  std::string to_string() const;
};

struct BlowupCenter {
  std::string label;
  PPoint base;
  std::optional<FiberDir> dir;  // set for a center sitting on another fiber
};

struct BlowupRegistry {
  std::vector<BlowupCenter> centers;
  void add(const std::string& label, const PPoint& base);
  void add(const std::string& label, const PPoint& base, const FiberDir& dir);
  const BlowupCenter* find_base(const PPoint& base) const;
  const BlowupCenter* find_fiber_point(const PPoint& base, const FiberDir& dir) const;
};

// Germ through p transverse to every exceptional curve of f through p.
JetPoint start_jet(const BiMap& f, const PPoint& p, const BlowupRegistry& reg, int order);

// One application of the induced (blown-up) map: evaluate the components on the
// germ, renormalize by the lowest t-order, and read fiber data off the registry.
JetPoint jet_evaluate(const BiMap& f, const JetPoint& p, const BlowupRegistry& reg);

// Induced map S -> E_c for a point p on an exceptional curve S collapsing onto a
// registered center c: divide the affine image components relative to c by S to
// the exact common vanishing order and evaluate at p.
JetPoint fiber_direction_image(const BiMap& f, const JetPoint& p, const BlowupRegistry& reg,
                               int order = 6);

// The minimal germ with the same observables (center, dir1, dir2): orbit points
// are points of the blown-up surface, so iterating canonical representatives is
// exact wherever the induced map is determinate, and it keeps the coefficient
// height of long orbits tied to the height of the points themselves.
JetPoint canonical_jet(const BiMap& f, const JetPoint& observed, const BlowupRegistry& reg, int order);

// Total coefficient size (bits) of the data identifying the point.
size_t jet_height_bits(const JetPoint& p);

}  // namespace birmap
