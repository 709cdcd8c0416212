#include "birmap/jets.hpp"

#include <map>

#include "birmap/errors.hpp"

namespace birmap {

Series Series::make(const FieldPtr& f, int order) {
  Series s;
  s.field = f;
  s.c.assign(static_cast<size_t>(order) + 1, FieldElem::zero(f));
  return s;
}

Series Series::line(const FieldPtr& f, int order, const FieldElem& at, const FieldElem& dir) {
  Series s = make(f, order);
  s.c[0] = at;
  if (order >= 1) s.c[1] = dir;
  return s;
}

int Series::valuation() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) return static_cast<int>(i);
  return order() + 1;
}

Series Series::operator+(const Series& o) const {
  Series r = *this;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r = *this;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Series Series::operator*(const Series& o) const {
  Series r = make(field, order());
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (size_t j = 0; i + j < r.c.size(); ++j) FieldElem::addmul(r.c[i + j], c[i], o.c[j]);
  }
  return r;
}

Series Series::scaled(const FieldElem& a) const {
  Series r = *this;
  for (auto& x : r.c) x = x * a;
  return r;
}

Series Series::shifted_down(int k) const {
  if (k == 0) return *this;
  Series r = make(field, order());
  for (size_t i = static_cast<size_t>(k); i < c.size(); ++i) r.c[i - static_cast<size_t>(k)] = c[i];
  return r;
}

Series Series::divide(const Series& a, const Series& b) {
  if (b.at0().is_zero()) raise(ErrorCode::InvalidParameter, "series division needs a unit");
  Series r = make(a.field, a.order());
  FieldElem inv0 = b.at0().inv();
  for (size_t n = 0; n < r.c.size(); ++n) {
    FieldElem acc = a.c[n];
    for (size_t i = 0; i < n; ++i) acc -= r.c[i] * b.c[n - i];
    r.c[n] = acc * inv0;
  }
  return r;
}

FiberDir make_dir(const FieldElem& u, const FieldElem& v) {
  if (!u.is_zero()) {
    FieldElem inv = u.inv();
    return {FieldElem::one(u.field()), v * inv};
  }
  if (v.is_zero()) raise(ErrorCode::InvalidParameter, "zero direction");
  return {FieldElem::zero(v.field()), FieldElem::one(v.field())};
}

bool JetPoint::same_place(const JetPoint& o) const {
  if (depth != o.depth || !(center == o.center)) return false;
  if (depth >= 1 && !(dir1 && o.dir1 && *dir1 == *o.dir1)) return false;
  if (depth >= 2 && !(dir2 && o.dir2 && *dir2 == *o.dir2)) return false;
  return true;
}

std::string JetPoint::to_string() const {
  std::string s = center.to_string();
  if (depth >= 1 && dir1) s = dir1->to_string() + (label.empty() ? "" : "_" + label) + " over " + s;
  if (depth >= 2 && dir2) s = dir2->to_string() + " over " + s;
  return s;
}

void BlowupRegistry::add(const std::string& label, const PPoint& base) {
  if (find_base(base)) raise(ErrorCode::InvalidParameter, "duplicate blow-up center " + base.to_string());
  centers.push_back({label, base, std::nullopt});
}

void BlowupRegistry::add(const std::string& label, const PPoint& base, const FiberDir& dir) {
  if (find_fiber_point(base, dir))
    raise(ErrorCode::InvalidParameter, "duplicate fiber blow-up center over " + base.to_string());
  centers.push_back({label, base, dir});
}

const BlowupCenter* BlowupRegistry::find_base(const PPoint& base) const {
  for (const auto& c : centers)
    if (!c.dir && c.base == base) return &c;
  return nullptr;
}

const BlowupCenter* BlowupRegistry::find_fiber_point(const PPoint& base, const FiberDir& dir) const {
  for (const auto& c : centers)
    if (c.dir && c.base == base && *c.dir == dir) return &c;
  return nullptr;
}

namespace {

std::array<Series, 3> lift_germ(int chart, const Series& u, const Series& v) {
  const FieldPtr& f = u.field;
  Series one = Series::make(f, u.order());
  one.c[0] = FieldElem::one(f);
  if (chart == 0) return {one, u, v};
  if (chart == 1) return {u, one, v};
  return {u, v, one};
}

Series eval_on_series(const Poly3& p, const std::array<Series, 3>& s) {
  const FieldPtr& f = s[0].field;
  const int J = s[0].order();
  Series zero = Series::make(f, J);
  if (p.is_zero()) return zero;
  std::map<int, std::map<int, std::map<int, FieldElem>>> levels;
  int max_e0 = 0;
  for (const auto& tm : p.terms()) {
    Mono m = Mono::from_key(tm.first);
    levels[m.e2][m.e1][m.e0] = tm.second;
    max_e0 = std::max(max_e0, m.e0);
  }
  std::vector<Series> p0;
  {
    Series one = Series::make(f, J);
    one.c[0] = FieldElem::one(f);
    p0.push_back(one);
    for (int i = 1; i <= max_e0; ++i) p0.push_back(p0.back() * s[0]);
  }
  int max_k = levels.rbegin()->first;
  Series acc = zero;
  for (int k = max_k; k >= 0; --k) {
    if (k != max_k) acc = acc * s[2];
    auto itk = levels.find(k);
    if (itk == levels.end()) continue;
    int max_j = itk->second.rbegin()->first;
    Series inner = zero;
    for (int j = max_j; j >= 0; --j) {
      if (j != max_j) inner = inner * s[1];
      auto itj = itk->second.find(j);
      if (itj == itk->second.end()) continue;
      for (const auto& [i, cf] : itj->second) inner = inner + p0[static_cast<size_t>(i)].scaled(cf);
    }
    acc = acc + inner;
  }
  return acc;
}

// fill in the registry-derived observables of a germ whose center is known
void classify_against_registry(JetPoint& jp, const BlowupRegistry& reg) {
  jp.depth = 0;
  jp.dir1.reset();
  jp.dir2.reset();
  jp.label.clear();
  const BlowupCenter* base = reg.find_base(jp.center);
  if (!base) return;
  const int reliable = jp.u.order() - jp.spent;
  auto [cu, cv] = jp.center.chart_coords(jp.chart);
  Series du = jp.u;
  du.c[0] -= cu;
  Series dv = jp.v;
  dv.c[0] -= cv;
  int s = std::min(du.valuation(), dv.valuation());
  if (s > reliable)
    raise(ErrorCode::IndeterminateJet, "germ collapses onto the blow-up center " + jp.center.to_string());
  jp.depth = 1;
  jp.dir1 = make_dir(du.c[static_cast<size_t>(s)], dv.c[static_cast<size_t>(s)]);
  jp.label = base->label;
  const BlowupCenter* fib = reg.find_fiber_point(jp.center, *jp.dir1);
  if (!fib) return;
  // second-level data: fiber coordinate is the slope in the blow-up chart
  Series s_coord, m_coord;
  FieldElem m0;
  if (!jp.dir1->u.is_zero()) {
    s_coord = du.shifted_down(s);
    m_coord = Series::divide(dv.shifted_down(s), s_coord);
    m0 = fib->dir->v / fib->dir->u;
    s_coord = du;  // the actual blow-up chart coordinate keeps its valuation
  } else {
    s_coord = dv.shifted_down(s);
    m_coord = Series::divide(du.shifted_down(s), s_coord);
    m0 = fib->dir->u / fib->dir->v;
    s_coord = dv;
  }
  m_coord.c[0] -= m0;
  int s2 = std::min(s_coord.valuation(), m_coord.valuation());
  if (s2 > reliable)
    raise(ErrorCode::IndeterminateJet, "germ collapses onto the fiber blow-up center over " +
                                           jp.center.to_string());
  jp.depth = 2;
  jp.dir2 = make_dir(s_coord.c[static_cast<size_t>(s2)], m_coord.c[static_cast<size_t>(s2)]);
  jp.label = fib->label;
}

}  // namespace

JetPoint start_jet(const BiMap& f, const PPoint& p, const BlowupRegistry& reg, int order) {
  const FieldPtr& fld = f.field;
  int chart = p.chart();
  auto [cu, cv] = p.chart_coords(chart);
  std::vector<Poly3> through;
  if (f.exceptional)
    for (const auto& s : *f.exceptional)
      if (s.eval(p.coords()).is_zero()) through.push_back(s);
  const std::pair<long, long> candidates[] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};
  for (auto [wu, wv] : candidates) {
    JetPoint jp;
    jp.chart = chart;
    jp.u = Series::line(fld, order, cu, FieldElem::from_int(fld, wu));
    jp.v = Series::line(fld, order, cv, FieldElem::from_int(fld, wv));
    jp.center = p;
    auto lift = lift_germ(chart, jp.u, jp.v);
    bool transverse = true;
    for (const auto& s : through)
      if (eval_on_series(s, lift).valuation() != 1) transverse = false;
    if (!transverse) continue;
    classify_against_registry(jp, reg);
    return jp;
  }
  raise(ErrorCode::IndeterminateJet, "no transverse germ direction at " + p.to_string());
}

JetPoint jet_evaluate(const BiMap& f, const JetPoint& p, const BlowupRegistry& reg) {
  auto lift = lift_germ(p.chart, p.u, p.v);
  std::array<Series, 3> img = {eval_on_series(f.comp[0], lift), eval_on_series(f.comp[1], lift),
                               eval_on_series(f.comp[2], lift)};
  int vmin = std::min({img[0].valuation(), img[1].valuation(), img[2].valuation()});
  if (vmin > img[0].order() - p.spent)
    raise(ErrorCode::IndeterminateJet, "all components vanish on the germ to truncation order");
  for (auto& s : img) s = s.shifted_down(vmin);
  PPoint center(img[0].at0(), img[1].at0(), img[2].at0());
  int chart = center.chart();
  int j = chart == 0 ? 1 : 0;
  int k = chart == 2 ? 1 : 2;
  JetPoint out;
  out.chart = chart;
  out.u = Series::divide(img[static_cast<size_t>(j)], img[static_cast<size_t>(chart)]);
  out.v = Series::divide(img[static_cast<size_t>(k)], img[static_cast<size_t>(chart)]);
  out.center = center;
  out.spent = p.spent + vmin;
  if (out.spent >= out.u.order())
    raise(ErrorCode::IndeterminateJet, "jet precision exhausted along the orbit");
  classify_against_registry(out, reg);
  return out;
}

JetPoint canonical_jet(const BiMap& f, const JetPoint& observed, const BlowupRegistry& reg, int order) {
  const FieldPtr& fld = f.field;
  if (observed.depth == 0) return start_jet(f, observed.center, reg, order);
  int chart = observed.center.chart();
  auto [cu, cv] = observed.center.chart_coords(chart);
  JetPoint jp;
  jp.chart = chart;
  jp.center = observed.center;
  if (observed.depth == 1) {
    jp.u = Series::line(fld, order, cu, observed.dir1->u);
    jp.v = Series::line(fld, order, cv, observed.dir1->v);
  } else {
    // depth 2: du = s2_u t, slope = m0 + (s2_v) t in the blow-up chart
    const FiberDir& d1 = *observed.dir1;
    const FiberDir& d2 = *observed.dir2;
    Series du = Series::make(fld, order), dv = Series::make(fld, order);
    bool primary_u = !d1.u.is_zero();
    FieldElem m0 = primary_u ? d1.v / d1.u : d1.u / d1.v;
    // s(t): valuation 1 when d2.u != 0, else valuation 2
    Series s_coord = Series::make(fld, order);
    Series slope = Series::make(fld, order);
    slope.c[0] = m0;
    if (!d2.u.is_zero()) {
      s_coord.c[1] = d2.u;
      if (order >= 1) slope.c[1] = d2.v / d2.u;  // (m - m0) leading over s leading
    } else {
      if (order >= 2) s_coord.c[2] = FieldElem::one(fld);
      if (order >= 1) slope.c[1] = FieldElem::one(fld);  // scaled so dir2 = [0:1]
    }
    Series secondary = s_coord * slope;
    if (primary_u) {
      du = s_coord;
      dv = secondary;
    } else {
      dv = s_coord;
      du = secondary;
    }
    jp.u = du;
    jp.u.c[0] += cu;
    jp.v = dv;
    jp.v.c[0] += cv;
  }
  classify_against_registry(jp, reg);
  return jp;
}

size_t jet_height_bits(const JetPoint& p) {
  size_t bits = 0;
  auto count = [&](const FieldElem& e) {
    for (const Rat& q : e.coeffs())
      bits += mpz_sizeinbase(q.get_num().get_mpz_t(), 2) + mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
  };
  for (const auto& c : p.center.coords()) count(c);
  if (p.dir1) {
    count(p.dir1->u);
    count(p.dir1->v);
  }
  if (p.dir2) {
    count(p.dir2->u);
    count(p.dir2->v);
  }
  return bits;
}

JetPoint fiber_direction_image(const BiMap& f, const JetPoint& p, const BlowupRegistry& reg, int order) {
  if (!f.exceptional) raise(ErrorCode::NotOnCollapsedCurve, "map has no exceptional data");
  if (p.depth > 0)
    raise(ErrorCode::TowerTooDeep, "fiber_direction_image expects an ordinary point on the curve");
  const Poly3* curve = nullptr;
  for (const auto& s : *f.exceptional)
    if (s.eval(p.center.coords()).is_zero()) {
      if (curve) raise(ErrorCode::NotOnCollapsedCurve, "point lies on two exceptional curves");
      curve = &s;
    }
  if (!curve) raise(ErrorCode::NotOnCollapsedCurve, "point is not on a collapsed curve");
  PPoint c = collapse_image(f, *curve);
  const BlowupCenter* entry = reg.find_base(c);
  if (!entry)
    raise(ErrorCode::NotOnCollapsedCurve, "collapse target " + c.to_string() + " is not registered");
  int chart = c.chart();
  auto [cu, cv] = c.chart_coords(chart);
  int j = chart == 0 ? 1 : 0;
  int k = chart == 2 ? 1 : 2;
  Poly3 nu = f.comp[static_cast<size_t>(j)] - f.comp[static_cast<size_t>(chart)].scaled(cu);
  Poly3 nv = f.comp[static_cast<size_t>(k)] - f.comp[static_cast<size_t>(chart)].scaled(cv);
  auto strip_order = [&](Poly3 q) {
    int n = 0;
    while (!q.is_zero()) {
      auto d = poly_try_div(q, *curve);
      if (!d) break;
      q = *d;
      ++n;
    }
    return std::pair<int, Poly3>(n, q);
  };
  auto [su, nu_red] = strip_order(nu);
  auto [sv, nv_red] = strip_order(nv);
  int s = std::min(su, sv);
  Poly3 du = su == s ? nu_red : nu;  // re-divide to the common order below
  Poly3 dv = sv == s ? nv_red : nv;
  if (su != s) {
    du = nu;
    for (int i = 0; i < s; ++i) du = poly_div_exact(du, *curve);
  }
  if (sv != s) {
    dv = nv;
    for (int i = 0; i < s; ++i) dv = poly_div_exact(dv, *curve);
  }
  FieldElem U = du.eval(p.center.coords());
  FieldElem V = dv.eval(p.center.coords());
  if (U.is_zero() && V.is_zero())
    raise(ErrorCode::TowerTooDeep, "fiber direction undetermined at " + p.center.to_string());
  FiberDir dir = make_dir(U, V);
  JetPoint out;
  out.chart = chart;
  out.u = Series::line(f.field, order, cu, U);
  out.v = Series::line(f.field, order, cv, V);
  out.center = c;
  out.depth = 1;
  out.dir1 = dir;
  out.label = entry->label;
  if (const BlowupCenter* fib = reg.find_fiber_point(c, dir)) {
    out.depth = 2;
    out.label = fib->label;
    out.dir2.reset();  // undetermined at this level of information
  }
  return out;
}

}  // namespace birmap
