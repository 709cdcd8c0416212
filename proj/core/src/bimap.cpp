#include "birmap/bimap.hpp"

#include <algorithm>

#include "birmap/errors.hpp"

namespace birmap {

namespace {

Poly3 lin(const FieldPtr& f, const FieldElem& c0, const FieldElem& c1, const FieldElem& c2) {
  return Poly3::from_terms(f, {{1, 0, 0, c0}, {0, 1, 0, c1}, {0, 0, 1, c2}});
}

void check_indeterminacy(const BiMap& m) {
  if (!m.indeterminacy) return;
  for (const auto& p : *m.indeterminacy)
    for (const auto& c : m.comp)
      if (!c.eval(p.coords()).is_zero())
        raise(ErrorCode::InvalidParameter, "declared indeterminacy point does not kill the components");
}

int strip_common_factors(std::array<Poly3, 3>& c, const std::vector<Poly3>& factors) {
  int cancelled = 0;
  for (const auto& s : factors) {
    if (s.degree() < 1) continue;
    while (true) {
      auto q0 = poly_try_div(c[0], s);
      if (!q0) break;
      auto q1 = poly_try_div(c[1], s);
      if (!q1) break;
      auto q2 = poly_try_div(c[2], s);
      if (!q2) break;
      c = {std::move(*q0), std::move(*q1), std::move(*q2)};
      cancelled += s.degree();
    }
  }
  return cancelled;
}

void joint_rational_normalize(std::array<Poly3, 3>& c) {
  mpz_class num(0), den(1);
  for (const auto& p : c)
    for (const auto& tm : p.terms())
      for (const Rat& q : tm.second.coeffs()) {
        if (is_zero(q)) continue;
        num = gcd(num, q.get_num());
        den = lcm(den, q.get_den());
      }
  if (num == 0) return;
  Rat scale(den, num);
  scale.canonicalize();
  for (auto& p : c) p = p.scaled_rat(scale);
  for (const auto& p : c) {
    if (p.is_zero()) continue;
    for (const Rat& q : p.leading().second.coeffs()) {
      int s = sgn(q);
      if (s == 0) continue;
      if (s < 0)
        for (auto& r : c) r = -r;
      return;
    }
  }
}

void enforce_term_cap(const std::array<Poly3, 3>& c, size_t cap) {
  for (const auto& p : c)
    if (p.term_count() > cap)
      raise(ErrorCode::ResourceLimit,
            "intermediate polynomial exceeds the term cap (" + std::to_string(cap) + ")");
}

}  // namespace

BiMap make_family_A(const FieldElem& a0, const FieldElem& a1, const FieldElem& g0) {
  if (a1.is_zero()) raise(ErrorCode::InvalidParameter, "family A needs a1 != 0");
  const FieldPtr f = a1.field();
  const FieldElem one = FieldElem::one(f), zero = FieldElem::zero(f);

  Poly3 s0 = lin(f, one, zero, zero);              // x0
  Poly3 s1 = lin(f, g0, zero, one);                // g0 x0 + x2
  Poly3 s2 = lin(f, g0, a1, one);                  // g0 x0 + a1 x1 + x2
  Poly3 l = lin(f, a0, a1, one);                   // a0 x0 + a1 x1 + x2

  BiMap m;
  m.field = f;
  m.comp = {Poly3::variable(f, 0) * s1, l * s1, Poly3::variable(f, 0) * Poly3::variable(f, 1)};
  m.degree = 2;
  m.tag = FamilyTag::A;
  m.params = {a0, a1, g0};
  m.indeterminacy = {{PPoint(one, zero, -g0), PPoint(zero, one, -a1), PPoint(zero, one, zero)}};
  m.exceptional = {{s0, s1, s2}};
  m.inv_indeterminacy = {{PPoint(zero, one, zero), PPoint(zero, zero, one),
                          PPoint(-a1, -a1 * (a0 - g0), one)}};
  // solved from f(x,y) = (u,v): y* = (u - a0 - a1 g0 v)/(1 + a1 v), x* = v (u + g0 - a0)/(1 + a1 v)
  Poly3 w0 = Poly3::variable(f, 0), w1 = Poly3::variable(f, 1), w2 = Poly3::variable(f, 2);
  Poly3 u_plus = lin(f, one, zero, a1);  // w0 + a1 w2
  m.inverse_comp = {{w0 * u_plus, w2 * lin(f, g0 - a0, one, zero), w0 * lin(f, -a0, one, -a1 * g0)}};
  m.inv_exceptional = {{lin(f, a0 - g0, -one, zero), u_plus, s0}};
  check_indeterminacy(m);
  return m;
}

BiMap make_family_B(const FieldElem& a0, const FieldElem& a1, const FieldElem& b2) {
  if (a1.is_zero()) raise(ErrorCode::InvalidParameter, "family B needs a1 != 0");
  const FieldPtr f = a1.field();
  const FieldElem one = FieldElem::one(f), zero = FieldElem::zero(f);

  Poly3 w0 = Poly3::variable(f, 0), w1 = Poly3::variable(f, 1), w2 = Poly3::variable(f, 2);
  BiMap m;
  m.field = f;
  m.comp = {w0 * w2, lin(f, a0, a1, zero) * w2, w0 * lin(f, zero, one, b2)};
  m.degree = 2;
  m.tag = FamilyTag::B;
  m.params = {a0, a1, b2};
  m.indeterminacy = {{PPoint(one, zero, zero), PPoint(zero, zero, one), PPoint(zero, one, zero)}};
  m.exceptional = {{w0, w2, w1}};  // S0 = {x0}, S1 = {x2}, S2 = {x1}
  m.inv_indeterminacy = {{PPoint(zero, one, zero), PPoint(zero, zero, one), PPoint(one, a0, b2)}};
  Poly3 num = lin(f, -a0, one, zero);   // w1 - a0 w0
  Poly3 den = lin(f, -b2, zero, one);   // w2 - b2 w0
  m.inverse_comp = {{w0.scaled(a1) * den, num * den, w0 * num}};
  m.inv_exceptional = {{lin(f, a0, -one, zero), lin(f, b2, zero, -one), w0}};
  check_indeterminacy(m);
  return m;
}

BiMap make_identity(const FieldPtr& f) {
  BiMap m;
  m.field = f;
  m.comp = {Poly3::variable(f, 0), Poly3::variable(f, 1), Poly3::variable(f, 2)};
  m.degree = 1;
  m.tag = FamilyTag::Raw;
  m.inverse_comp = m.comp;
  m.indeterminacy = std::vector<PPoint>{};
  m.exceptional = std::vector<Poly3>{};
  m.inv_indeterminacy = std::vector<PPoint>{};
  m.inv_exceptional = std::vector<Poly3>{};
  return m;
}

BiMap make_raw(std::array<Poly3, 3> comp, std::optional<std::array<Poly3, 3>> inverse,
               std::optional<std::vector<PPoint>> indeterminacy,
               std::optional<std::vector<Poly3>> exceptional) {
  BiMap m;
  m.field = comp[0].field();
  int d = comp[0].degree();
  for (const auto& c : comp) {
    if (c.is_zero() || c.degree() != d || !c.is_homogeneous())
      raise(ErrorCode::ValidationError, "raw components must be nonzero homogeneous of one degree");
  }
  if (d >= 1) {
    Poly3 g = poly_gcd(poly_gcd(comp[0], comp[1]), comp[2]);
    if (g.degree() > 0) raise(ErrorCode::ValidationError, "raw components share the factor " + g.to_string());
  }
  m.comp = std::move(comp);
  m.degree = d;
  m.tag = FamilyTag::Raw;
  m.inverse_comp = std::move(inverse);
  m.indeterminacy = std::move(indeterminacy);
  m.exceptional = std::move(exceptional);
  check_indeterminacy(m);
  return m;
}

std::pair<BiMap, AffineConj> normalize_family_B(const FieldElem& b0, const FieldElem& b1,
                                                const FieldElem& b2, const FieldElem& g0,
                                                const FieldElem& g2, const FieldElem& a0,
                                                const FieldElem& a1) {
  if (b1.is_zero() || g2.is_zero() || a1.is_zero())
    raise(ErrorCode::InvalidParameter, "normalization needs b1, g2, a1 all nonzero");
  const FieldPtr f = a1.field();
  const FieldElem one = FieldElem::one(f), zero = FieldElem::zero(f);
  FieldElem a = b1 * g2;
  FieldElem b = (b2 * g0 - b0 * g2) / a;
  FieldElem c = b1;
  FieldElem d = -(g0 / g2);
  FieldElem new_b2 = (g0 + b2) / a;
  FieldElem new_a0 = (a0 + (a1 - one) * b) / a;
  BiMap g = make_family_B(new_a0, a1, new_b2);

  // h∘g = f∘h, checked as an exact projective identity
  Poly3 H0 = Poly3::variable(f, 0);
  Poly3 H1 = lin(f, b, a, zero);
  Poly3 H2 = lin(f, d, zero, c);
  std::array<Poly3, 3> forig = {
      Poly3::variable(f, 0) * lin(f, g0, zero, g2),
      lin(f, a0, a1, zero) * lin(f, g0, zero, g2),
      Poly3::variable(f, 0) * lin(f, b0, b1, b2),
  };
  std::array<Poly3, 3> lhs, rhs;
  for (int i = 0; i < 3; ++i) {
    const Poly3& Hi = i == 0 ? H0 : i == 1 ? H1 : H2;
    lhs[static_cast<size_t>(i)] = poly_subst(Hi, g.comp[0], g.comp[1], g.comp[2]);
    rhs[static_cast<size_t>(i)] = poly_subst(forig[static_cast<size_t>(i)], H0, H1, H2);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(lhs[static_cast<size_t>(i)] * rhs[static_cast<size_t>(j)] ==
            lhs[static_cast<size_t>(j)] * rhs[static_cast<size_t>(i)]))
        raise(ErrorCode::ValidationError, "conjugation identity h∘g = f∘h failed");
  return {std::move(g), AffineConj{a, b, c, d}};
}

ComposeResult map_compose_detailed(const BiMap& f, const BiMap& g, size_t term_cap) {
  std::array<Poly3, 3> c;
  for (int i = 0; i < 3; ++i)
    c[static_cast<size_t>(i)] = poly_subst(f.comp[static_cast<size_t>(i)], g.comp[0], g.comp[1], g.comp[2]);
  enforce_term_cap(c, term_cap);
  int cancelled = 0;
  if (g.exceptional && !g.exceptional->empty()) {
    // a common factor of f∘g is a curve g maps into the finite base locus of f,
    // hence an exceptional curve of g
    cancelled = strip_common_factors(c, *g.exceptional);
  } else if (g.degree >= 1 && f.degree >= 1) {
    Poly3 gc = poly_gcd(poly_gcd(c[0], c[1]), c[2]);
    if (gc.degree() > 0) {
      cancelled = gc.degree();
      for (auto& p : c) p = poly_div_exact(p, gc);
    }
  }
  joint_rational_normalize(c);
  BiMap m;
  m.field = f.field;
  m.degree = c[0].degree();
  m.comp = std::move(c);
  m.tag = FamilyTag::Raw;
  ComposeResult r;
  r.map = std::move(m);
  r.cancelled_degree = cancelled;
  return r;
}

BiMap map_compose(const BiMap& f, const BiMap& g) { return map_compose_detailed(f, g).map; }

std::optional<PPoint> map_evaluate(const BiMap& f, const PPoint& p) {
  FieldElem a = f.comp[0].eval(p.coords());
  FieldElem b = f.comp[1].eval(p.coords());
  FieldElem c = f.comp[2].eval(p.coords());
  if (a.is_zero() && b.is_zero() && c.is_zero()) return std::nullopt;
  return PPoint(std::move(a), std::move(b), std::move(c));
}

std::vector<long> degree_sequence(const BiMap& f, int n_max, size_t term_cap, long stop_degree) {
  if (n_max < 1) raise(ErrorCode::InvalidParameter, "degree_sequence needs n_max >= 1");
  std::vector<Poly3> cancel_factors;
  if (f.exceptional) cancel_factors = *f.exceptional;
  std::vector<long> d;
  d.reserve(static_cast<size_t>(n_max));
  std::array<Poly3, 3> cur = f.comp;
  d.push_back(f.degree);
  for (int n = 2; n <= n_max && (stop_degree == 0 || d.back() <= stop_degree); ++n) {
    std::array<Poly3, 3> nxt;
    for (int i = 0; i < 3; ++i)
      nxt[static_cast<size_t>(i)] = poly_subst(cur[static_cast<size_t>(i)], f.comp[0], f.comp[1], f.comp[2]);
    enforce_term_cap(nxt, term_cap);
    if (!cancel_factors.empty()) {
      strip_common_factors(nxt, cancel_factors);
    } else {
      Poly3 gc = poly_gcd(poly_gcd(nxt[0], nxt[1]), nxt[2]);
      if (gc.degree() > 0)
        for (auto& p : nxt) p = poly_div_exact(p, gc);
    }
    joint_rational_normalize(nxt);
    cur = std::move(nxt);
    d.push_back(cur[0].degree());
  }
  return d;
}

Poly3 jacobian_det(const BiMap& f) {
  std::array<std::array<Poly3, 3>, 3> j;
  for (int i = 0; i < 3; ++i)
    for (int v = 0; v < 3; ++v)
      j[static_cast<size_t>(i)][static_cast<size_t>(v)] = f.comp[static_cast<size_t>(i)].derivative(v);
  auto& m = j;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

// two distinct points spanning the line a x0 + b x1 + c x2 = 0
std::pair<PPoint, PPoint> line_points(const Poly3& s) {
  const FieldPtr& f = s.field();
  FieldElem a = s.coeff(Mono{1, 0, 0}), b = s.coeff(Mono{0, 1, 0}), c = s.coeff(Mono{0, 0, 1});
  const FieldElem zero = FieldElem::zero(f), one = FieldElem::one(f);
  if (!a.is_zero()) return {PPoint(-b, a, zero), PPoint(-c, zero, a)};
  if (!b.is_zero()) return {PPoint(one, zero, zero), PPoint(zero, -c, b)};
  return {PPoint(one, zero, zero), PPoint(zero, one, zero)};
}

}  // namespace

PPoint collapse_image(const BiMap& f, const Poly3& s) {
  if (s.degree() != 1)
    raise(ErrorCode::InvalidParameter, "collapse_image expects a line (quadratic-map exceptional curve)");
  auto [p, q] = line_points(s);
  const FieldPtr& fld = f.field;
  std::optional<PPoint> image;
  int found = 0;
  // deterministic parameter sweep t = 0, 1, 2, ... skipping indeterminacy points
  for (long t = 0; t <= 16 && found < 3; ++t) {
    FieldElem tt = FieldElem::from_int(fld, t);
    std::array<FieldElem, 3> coords;
    bool nonzero = false;
    for (int i = 0; i < 3; ++i) {
      coords[static_cast<size_t>(i)] = p[i] + tt * q[i];
      nonzero = nonzero || !coords[static_cast<size_t>(i)].is_zero();
    }
    if (!nonzero) continue;
    PPoint sample(coords[0], coords[1], coords[2]);
    auto img = map_evaluate(f, sample);
    if (!img) continue;
    if (!image) image = img;
    else if (*image != *img)
      raise(ErrorCode::NotCollapsed, "sampled images of " + s.to_string() + " disagree");
    ++found;
  }
  if (!image || found < 3) raise(ErrorCode::NotCollapsed, "not enough regular sample points on " + s.to_string());
  return *image;
}

std::vector<Poly3> exceptional_locus(const BiMap& f) {
  std::vector<Poly3> out;
  Poly3 jac = jacobian_det(f);
  if (f.exceptional) {
    out = *f.exceptional;
  } else {
    if (f.degree == 1) return {};
    // monomial content of the Jacobian covers coordinate-line collapses
    Poly3 rest = jac;
    const FieldPtr& fld = f.field;
    for (int v = 0; v < 3; ++v) {
      int k = rest.var_valuation(v);
      if (k > 0) {
        out.push_back(Poly3::variable(fld, v));
        rest = rest.shift_var(v, -k);
      }
    }
    if (rest.degree() > 0 && f.degree == 2 && f.indeterminacy && f.indeterminacy->size() == 3) {
      // quadratic case: exceptional lines join pairs of base points
      const auto& o = *f.indeterminacy;
      for (int i = 0; i < 3 && rest.degree() > 0; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const PPoint &p = o[static_cast<size_t>(i)], &q = o[static_cast<size_t>(j)];
          FieldElem a = p[1] * q[2] - p[2] * q[1];
          FieldElem b = p[2] * q[0] - p[0] * q[2];
          FieldElem c = p[0] * q[1] - p[1] * q[0];
          Poly3 line = lin(f.field, a, b, c);
          if (line.is_zero()) continue;
          line = line.monic();
          if (std::find(out.begin(), out.end(), line) != out.end()) continue;
          if (auto qq = poly_try_div(rest, line)) {
            out.push_back(line);
            rest = *qq;
          }
        }
    }
    if (rest.degree() > 0)
      raise(ErrorCode::NonLinearFactor, "unsplit Jacobian remainder " + rest.to_string());
  }
  // each claimed curve must divide the Jacobian and collapse under sampling
  std::vector<Poly3> verified;
  for (const auto& s : out) {
    if (!jac.is_zero() && !poly_try_div(jac, s))
      raise(ErrorCode::ValidationError, "claimed exceptional curve does not divide the Jacobian");
    collapse_image(f, s);
    verified.push_back(s);
  }
  return verified;
}

BiMap map_inverse(const BiMap& f) {
  if (!f.inverse_comp)
    raise(ErrorCode::NoInverseAvailable, "no closed-form inverse attached to this map");
  BiMap g;
  g.field = f.field;
  g.comp = *f.inverse_comp;
  g.degree = g.comp[0].degree();
  g.tag = FamilyTag::Raw;
  g.inverse_comp = f.comp;
  g.indeterminacy = f.inv_indeterminacy;
  g.exceptional = f.inv_exceptional;
  g.inv_indeterminacy = f.indeterminacy;
  g.inv_exceptional = f.exceptional;
  check_indeterminacy(g);
  return g;
}

namespace {

void push_verified_fixed(const BiMap& f, const FieldElem& x, const FieldElem& y,
                         std::vector<FixedPoint>& out) {
  PPoint p = PPoint::affine(x, y);
  auto img = map_evaluate(f, p);
  if (img && *img == p) out.push_back({p, 1});
}

}  // namespace

std::vector<FixedPoint> fixed_points(const BiMap& f) {
  std::vector<FixedPoint> out;
  const FieldPtr& fld = f.field;
  const FieldElem one = FieldElem::one(fld);
  if (f.tag == FamilyTag::A) {
    const FieldElem &a0 = f.param(0), &a1 = f.param(1), &g0 = f.param(2);
    if (a1 == one) {
      FieldElem y = -a0;
      FieldElem x = y * (g0 + y);
      push_verified_fixed(f, x, y, out);
    } else {
      // (1-a1) y^2 + (g0(1-a1) - 1) y - a0 = 0, x = (a0 + y)/(1 - a1)
      FieldElem A = one - a1;
      FieldElem B = g0 * A - one;
      FieldElem C = -a0;
      FieldElem disc = B * B - (A * C).scaled(rat(4));
      auto sq = field_sqrt(disc);
      if (!sq)
        raise(ErrorCode::ExtensionNeeded,
              "fixed points need a root of t^2 - (" + disc.to_string() + ")");
      FieldElem twoA = A.scaled(rat(2));
      for (const FieldElem& s : {*sq, -*sq}) {
        FieldElem y = (-B + s) / twoA;
        FieldElem x = (a0 + y) / A;
        push_verified_fixed(f, x, y, out);
        if (sq->is_zero()) break;
      }
    }
    // genuine 2-cycles exist only on the g0(1+a1) = 1 locus; sample the
    // one-parameter family there and verify each cycle exactly
    if (g0 * (one + a1) == one) {
      const FieldElem& g = g0;
      for (long t = 0; t <= 6 && out.size() < 8; ++t) {
        FieldElem y1 = FieldElem::from_int(fld, t);
        FieldElem den = (one - a1) * y1 - a1 * g;
        if (den.is_zero()) continue;
        FieldElem y2 = (a0 - g * y1 + y1) / den;
        if (y2 == y1) continue;
        FieldElem x1 = y2 * (g + y1);
        PPoint p = PPoint::affine(x1, y1);
        auto q = map_evaluate(f, p);
        if (!q) continue;
        auto back = map_evaluate(f, *q);
        if (back && *back == p && *q != p) {
          out.push_back({p, 2});
          out.push_back({*q, 2});
          break;
        }
      }
    }
  } else if (f.tag == FamilyTag::B) {
    const FieldElem &a0 = f.param(0), &a1 = f.param(1), &b2 = f.param(2);
    if (a1 == one) {
      if (a0.is_zero()) {
        // fixed curve y^2 - b2 y - x = 0: representatives
        for (long t = 1; t <= 3; ++t) {
          FieldElem y = FieldElem::from_int(fld, t);
          FieldElem x = y * y - b2 * y;
          push_verified_fixed(f, x, y, out);
        }
      }
    } else {
      FieldElem X = a0 / (one - a1);
      FieldElem disc = b2 * b2 + X.scaled(rat(4));
      auto sq = field_sqrt(disc);
      if (!sq)
        raise(ErrorCode::ExtensionNeeded,
              "fixed points need a root of t^2 - (" + disc.to_string() + ")");
      for (const FieldElem& s : {*sq, -*sq}) {
        FieldElem y = (b2 + s).scaled(rat(1, 2));
        push_verified_fixed(f, X, y, out);
        if (sq->is_zero()) break;
      }
    }
  } else {
    raise(ErrorCode::InvalidParameter, "fixed_points needs a family-tagged map");
  }
  return out;
}

}  // namespace birmap
