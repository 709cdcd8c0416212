#include "birmap/orbits.hpp"

#include "birmap/errors.hpp"

namespace birmap {

namespace {

const std::vector<PPoint>& indet_of(const BiMap& f) {
  if (!f.indeterminacy) raise(ErrorCode::InvalidParameter, "orbit tracking needs indeterminacy data");
  return *f.indeterminacy;
}

const std::vector<PPoint>& inv_indet_of(const BiMap& f) {
  if (!f.inv_indeterminacy)
    raise(ErrorCode::InvalidParameter, "orbit tracking needs inverse-indeterminacy data");
  return *f.inv_indeterminacy;
}

}  // namespace

OrbitRecord track_orbit_with(const BiMap& f, const PPoint& start, int start_index,
                             const BlowupRegistry& reg, const std::vector<int>& remaining_indet,
                             int max_steps, int jet_order) {
  const auto& O = indet_of(f);
  OrbitRecord rec;
  rec.start = start_index;
  auto is_terminal = [&](const JetPoint& jp, int& which) {
    if (jp.depth != 0) return false;
    for (int j : remaining_indet)
      if (jp.center == O[static_cast<size_t>(j)]) {
        which = j;
        return true;
      }
    return false;
  };
  auto on_exceptional = [&](const PPoint& p) {
    if (!f.exceptional) return false;
    for (const auto& s : *f.exceptional)
      if (s.eval(p.coords()).is_zero()) return true;
    return false;
  };
  const size_t height_cap = 1 << 14;  // bits; deep scans are diagnostic only
  JetPoint cur = start_jet(f, start, reg, jet_order);
  rec.points.push_back(cur);
  int which = -1;
  if (is_terminal(cur, which)) {
    rec.terminal = {OrbitTerminal::Kind::Reached, which, ""};
    return rec;
  }
  for (int step = 1; step <= max_steps; ++step) {
    JetPoint nxt;
    try {
      nxt = jet_evaluate(f, cur, reg);
      if (nxt.depth >= 1 && cur.depth == 0 && !on_exceptional(cur.center)) {
        // an ordinary point off the exceptional locus hit a blow-up center: the
        // induced image direction is not a function of the point
        rec.points.push_back(nxt);
        rec.terminal = {OrbitTerminal::Kind::Collapsed, -1,
                        "orbit meets the blow-up center " + nxt.center.to_string() +
                            " away from the exceptional locus"};
        return rec;
      }
      nxt = canonical_jet(f, nxt, reg, jet_order);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IndeterminateJet || e.code() == ErrorCode::TowerTooDeep) {
        rec.terminal = {OrbitTerminal::Kind::Collapsed, -1, e.what()};
        return rec;
      }
      throw;
    }
    rec.points.push_back(nxt);
    if (is_terminal(nxt, which)) {
      rec.terminal = {OrbitTerminal::Kind::Reached, which, ""};
      return rec;
    }
    for (size_t i = 0; i + 1 < rec.points.size(); ++i)
      if (rec.points[i].same_place(nxt)) {
        rec.terminal = {OrbitTerminal::Kind::Truncated, -1,
                        "cycle back to step " + std::to_string(i)};
        return rec;
      }
    if (jet_height_bits(nxt) > height_cap) {
      rec.terminal = {OrbitTerminal::Kind::Truncated, -1, "coordinate height cap"};
      return rec;
    }
    cur = std::move(nxt);
  }
  rec.terminal = {OrbitTerminal::Kind::Truncated, -1, "step cap"};
  return rec;
}

namespace {

// registry with E0 at A0 (and E1 at A1 = O1 for family B)
BlowupRegistry base_registry(const BiMap& f) {
  BlowupRegistry reg;
  const auto& A = inv_indet_of(f);
  reg.add("E0", A[0]);
  if (f.tag == FamilyTag::B) reg.add("E1", A[1]);
  return reg;
}

// When the A1-orbit is singular elementary its points get blown up: fibers
// G0..G2k over A1, F~(A1), ..., F~^{2k}(A1) = O1; the odd points live on E0.
void register_a1_tower(BlowupRegistry& reg, const OrbitRecord& a1_orbit) {
  for (size_t i = 0; i < a1_orbit.points.size(); ++i) {
    const JetPoint& jp = a1_orbit.points[i];
    std::string label = "G" + std::to_string(i);
    if (jp.depth == 0) reg.add(label, jp.center);
    else if (jp.depth == 1 && jp.dir1) reg.add(label, jp.center, *jp.dir1);
    else raise(ErrorCode::TowerTooDeep, "A1-orbit point at depth 2 cannot be blown up (depth 3)");
  }
}

OrbitRecord orbit_reached_immediately(int start, const BiMap& f, const PPoint& p, int which,
                                      const BlowupRegistry& reg, int jet_order) {
  OrbitRecord rec;
  rec.start = start;
  rec.points.push_back(start_jet(f, p, reg, jet_order));
  rec.terminal = {OrbitTerminal::Kind::Reached, which, ""};
  return rec;
}

}  // namespace

OrbitRecord track_orbit(const BiMap& f, int start, int max_steps, int jet_order) {
  if (max_steps < 1) raise(ErrorCode::InvalidParameter, "max_steps >= 1 required");
  if (f.tag == FamilyTag::Raw) raise(ErrorCode::InvalidParameter, "orbit tracking needs a family-tagged map");
  const auto& A = inv_indet_of(f);
  const auto& O = indet_of(f);
  BlowupRegistry reg = base_registry(f);

  if (start == 0) {
    // A0 = O2 for both families
    if (A[0] == O[2]) return orbit_reached_immediately(0, f, A[0], 2, BlowupRegistry{}, jet_order);
    return track_orbit_with(f, A[0], 0, BlowupRegistry{}, {0, 1, 2}, max_steps, jet_order);
  }
  if (start == 1) {
    if (f.tag == FamilyTag::B) return orbit_reached_immediately(1, f, A[1], 1, reg, jet_order);
    return track_orbit_with(f, A[1], 1, reg, {0, 1}, max_steps, jet_order);
  }
  // A2
  if (f.tag == FamilyTag::B) {
    return track_orbit_with(f, A[2], 2, reg, {0}, max_steps, jet_order);
  }
  OrbitRecord a1 = track_orbit_with(f, A[1], 1, reg, {0, 1}, max_steps, jet_order);
  std::vector<int> remaining = {0, 1};
  if (a1.se() && a1.terminal.reached_index == 1) {
    register_a1_tower(reg, a1);
    remaining = {0};
  }
  return track_orbit_with(f, A[2], 2, reg, remaining, max_steps, jet_order);
}

SEProfile se_profile(const BiMap& f, int max_steps) {
  if (f.tag == FamilyTag::Raw) raise(ErrorCode::InvalidParameter, "se_profile needs a family-tagged map");
  const auto& A = inv_indet_of(f);
  const auto& O = indet_of(f);
  SEProfile prof;
  prof.registry = base_registry(f);
  const int jet_order = 6;

  auto fill = [&](OrbitSummary& s, OrbitRecord rec) {
    s.se = rec.se();
    s.length = rec.length();
    s.tau = rec.terminal.reached_index;
    s.record = std::move(rec);
  };

  // A0 = O2 always holds on these families; recorded as a 1-step SE orbit
  if (!(A[0] == O[2])) raise(ErrorCode::ValidationError, "family data violates A0 = O2");
  fill(prof.orbit[0], orbit_reached_immediately(0, f, A[0], 2, BlowupRegistry{}, jet_order));

  if (f.tag == FamilyTag::B) {
    if (!(A[1] == O[1])) raise(ErrorCode::ValidationError, "family B data violates A1 = O1");
    fill(prof.orbit[1], orbit_reached_immediately(1, f, A[1], 1, BlowupRegistry{}, jet_order));
    // Thm: F~^p(A2) = O0 reads as f^p(a0, b2) = (0,0) in the affine plane
    const FieldElem &a0 = f.param(0), &a1 = f.param(1), &b2 = f.param(2);
    FieldElem x = a0, y = b2;
    std::optional<int> p;
    for (int n = 0; n <= max_steps; ++n) {
      if (x.is_zero() && y.is_zero()) {
        p = n;
        break;
      }
      if (y.is_zero()) break;  // the affine orbit leaves the chart; not SE along this branch
      FieldElem nx = a0 + a1 * x;
      FieldElem ny = (x + b2 * y) / y;
      x = nx;
      y = ny;
    }
    if (p) {
      prof.p = p;
      OrbitRecord rec = track_orbit_with(f, A[2], 2, prof.registry, {0}, *p + 1, jet_order);
      fill(prof.orbit[2], std::move(rec));
      if (!prof.orbit[2].se || prof.orbit[2].length != *p + 1)
        raise(ErrorCode::ValidationError, "affine p-detection and jet tracking disagree");
    } else {
      fill(prof.orbit[2], track_orbit_with(f, A[2], 2, prof.registry, {0}, max_steps, jet_order));
      if (prof.orbit[2].se) prof.p = prof.orbit[2].length - 1;
    }
    return prof;
  }

  // family A
  OrbitRecord a1_rec = track_orbit_with(f, A[1], 1, prof.registry, {0, 1}, max_steps, jet_order);
  fill(prof.orbit[1], a1_rec);
  std::vector<int> remaining = {0, 1};
  if (a1_rec.se() && a1_rec.terminal.reached_index == 1) {
    prof.k = (a1_rec.length() - 1) / 2;
    register_a1_tower(prof.registry, a1_rec);
    remaining = {0};
  }

  const FieldElem &a1p = f.param(1), &g0 = f.param(2);
  const FieldElem minus_one = -FieldElem::one(f.field);
  if (a1p == minus_one && g0 == minus_one) {
    // collision locus: F~^4(A2) = O0 for every a0 (closed-form analysis); the
    // registry already holds the k=1 tower, and the tracked orbit confirms it
    OrbitRecord rec = track_orbit_with(f, A[2], 2, prof.registry, remaining, 4, jet_order);
    if (!(rec.se() && rec.terminal.reached_index == 0 && rec.length() == 5))
      raise(ErrorCode::ValidationError, "collision-locus orbit did not reach O0 in 4 steps");
    fill(prof.orbit[2], std::move(rec));
    prof.p = 4;
    return prof;
  }
  OrbitRecord rec = track_orbit_with(f, A[2], 2, prof.registry, remaining, max_steps, jet_order);
  fill(prof.orbit[2], std::move(rec));
  if (prof.orbit[2].se && prof.orbit[2].tau == 0) prof.p = prof.orbit[2].length - 1;
  return prof;
}

}  // namespace birmap
