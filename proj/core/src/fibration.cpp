#include "birmap/fibration.hpp"

#include <algorithm>
#include <map>

#include "birmap/errors.hpp"
#include "birmap/linalg.hpp"
#include "birmap/rat_poly.hpp"

namespace birmap {

Fibration make_fibration(Poly3 p, Poly3 q) {
  if (q.is_zero()) raise(ErrorCode::InvalidParameter, "fibration denominator is zero");
  if (!p.is_zero()) {
    // canonical form carries no common factor
    Poly3 g = poly_gcd(p, q);
    if (g.degree() > 0) {
      p = poly_div_exact(p, g);
      q = poly_div_exact(q, g);
    }
  }
  return {std::move(p), std::move(q)};
}

bool Mobius::is_identity_like() const {
  return w2.is_zero() && w3.is_zero() && !w1.is_zero() && w1 == w4;
}

Mobius mobius_identity(const FieldPtr& f) {
  return {FieldElem::one(f), FieldElem::zero(f), FieldElem::zero(f), FieldElem::one(f)};
}

Mobius mobius_scale(const FieldElem& lambda) {
  const FieldPtr& f = lambda.field();
  return {lambda, FieldElem::zero(f), FieldElem::zero(f), FieldElem::one(f)};
}

Mobius mobius_compose(const Mobius& a, const Mobius& b) {
  return {a.w1 * b.w1 + a.w2 * b.w3, a.w1 * b.w2 + a.w2 * b.w4, a.w3 * b.w1 + a.w4 * b.w3,
          a.w3 * b.w2 + a.w4 * b.w4};
}

FieldElem mobius_apply(const Mobius& m, const FieldElem& k) {
  return (m.w1 * k + m.w2) / (m.w3 * k + m.w4);
}

PullbackResult curve_pullback(const BiMap& f, const Poly3& curve) {
  if (!curve.is_homogeneous()) raise(ErrorCode::InvalidParameter, "curve_pullback expects a homogeneous curve");
  std::vector<Poly3> locus = f.exceptional ? *f.exceptional : exceptional_locus(f);
  PullbackResult r;
  r.proper = poly_subst(curve, f.comp[0], f.comp[1], f.comp[2]);
  r.mults.assign(locus.size(), 0);
  for (size_t i = 0; i < locus.size(); ++i) {
    while (true) {
      auto q = poly_try_div(r.proper, locus[i]);
      if (!q) break;
      r.proper = std::move(*q);
      r.mults[i] += 1;
      r.cancelled_degree += locus[i].degree();
    }
  }
  return r;
}

namespace {

std::vector<Mono> degree_monomials(int D) {
  std::vector<Mono> out;
  for (int e0 = D; e0 >= 0; --e0)
    for (int e1 = D - e0; e1 >= 0; --e1) out.push_back(Mono{e0, e1, D - e0 - e1});
  return out;
}

std::map<uint64_t, size_t> index_monomials(const std::vector<Mono>& ms) {
  std::map<uint64_t, size_t> idx;
  for (size_t i = 0; i < ms.size(); ++i) idx[ms[i].key()] = i;
  return idx;
}

std::vector<FieldElem> poly_to_vector(const Poly3& p, const std::map<uint64_t, size_t>& idx,
                                      const FieldPtr& f, size_t dim) {
  std::vector<FieldElem> v(dim, FieldElem::zero(f));
  for (const auto& tm : p.terms()) {
    auto it = idx.find(tm.first);
    if (it == idx.end()) raise(ErrorCode::InvalidParameter, "monomial outside the expected span");
    v[it->second] = tm.second;
  }
  return v;
}

// all nonnegative (s_0..s_{m-1}) with sum s_i * deg_i = target
void profiles_rec(const std::vector<int>& degs, size_t i, int target, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (i == degs.size()) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (int s = 0; s * degs[i] <= target; ++s) {
    cur.push_back(s);
    profiles_rec(degs, i + 1, target - s * degs[i], cur, out);
    cur.pop_back();
  }
}

// rational roots of a K[x] polynomial: common rational roots of the coordinate polys
std::vector<Rat> rational_roots_in_field(const KPoly& p) {
  const int e = p.field()->degree();
  RatPoly g;
  for (int j = 0; j < e; ++j) {
    std::vector<Rat> c;
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p[i].coeffs()[static_cast<size_t>(j)]);
    RatPoly coord(std::move(c));
    if (coord.is_zero()) continue;
    g = g.is_zero() ? coord : RatPoly::gcd(g, coord);
  }
  if (g.is_zero()) return {};  // identically zero polynomial: handled by caller
  return rational_roots(g);
}

std::vector<FieldElem> k_root_candidates(const KPoly& p) {
  const FieldPtr& f = p.field();
  std::vector<FieldElem> cands;
  for (const Rat& r : rational_roots_in_field(p)) cands.push_back(FieldElem::from_rat(f, r));
  if (f->degree() > 1) {
    // unit candidates c = ±a^j: catches the eigenvalues the families produce
    FieldElem a = FieldElem::gen(f);
    FieldElem pw = FieldElem::one(f);
    for (int j = 0; j <= 4 * f->degree(); ++j) {
      for (const FieldElem& c : {pw, -pw}) {
        if (!p.eval(c).is_zero()) continue;
        if (std::find(cands.begin(), cands.end(), c) == cands.end()) cands.push_back(c);
      }
      pw = pw * a;
    }
  }
  std::vector<FieldElem> roots;
  for (const auto& c : cands)
    if (p.eval(c).is_zero()) roots.push_back(c);
  return roots;
}

}  // namespace

CurveSearchResult search_invariant_curves(const BiMap& f, int D) {
  if (D < 1 || D > 8) raise(ErrorCode::InvalidParameter, "curve search supports 1 <= D <= 8");
  const FieldPtr& fld = f.field;
  CurveSearchResult result;
  std::vector<Poly3> locus = f.exceptional ? *f.exceptional : exceptional_locus(f);
  std::vector<int> locus_degs;
  for (const auto& s : locus) locus_degs.push_back(s.degree());
  const int target = (f.degree - 1) * D;
  std::vector<std::vector<int>> profiles;
  {
    std::vector<int> cur;
    profiles_rec(locus_degs, 0, target, cur, profiles);
  }
  if (profiles.empty()) return result;

  const std::vector<Mono> basis_D = degree_monomials(D);
  const auto idx_D = index_monomials(basis_D);
  const size_t N = basis_D.size();
  std::vector<Poly3> msub(N);
  for (size_t j = 0; j < N; ++j)
    msub[j] = poly_subst(Poly3::monomial(fld, basis_D[j], FieldElem::one(fld)), f.comp[0], f.comp[1],
                         f.comp[2]);

  auto emit = [&](const Poly3& curve, const FieldElem& lambda, const Poly3& profile_poly) {
    Poly3 canon = curve.monic();
    for (const auto& ec : result.curves)
      if (ec.curve == canon) return;
    // exactness: C∘F = lambda * C * prod S_i^{s_i} for the active profile
    Poly3 sub = poly_subst(canon, f.comp[0], f.comp[1], f.comp[2]);
    if (!(sub == (canon * profile_poly).scaled(lambda))) return;
    result.curves.push_back({canon, lambda});
  };

  for (const auto& prof : profiles) {
    Poly3 P = Poly3::constant(fld, FieldElem::one(fld));
    for (size_t i = 0; i < prof.size(); ++i)
      for (int k = 0; k < prof[i]; ++k) P = P * locus[i];
    // divisibility conditions: remainders of m_j∘F modulo P must cancel
    std::vector<Poly3> q(N), r(N);
    std::map<uint64_t, size_t> ridx;
    for (size_t j = 0; j < N; ++j) {
      auto [qq, rr] = poly_divmod(msub[j], P);
      q[j] = std::move(qq);
      r[j] = std::move(rr);
      for (const auto& tm : r[j].terms())
        if (!ridx.count(tm.first)) ridx[tm.first] = ridx.size();
    }
    std::vector<std::vector<FieldElem>> B;  // nullspace basis: admissible coefficient vectors
    if (ridx.empty()) {
      for (size_t j = 0; j < N; ++j) {
        std::vector<FieldElem> v(N, FieldElem::zero(fld));
        v[j] = FieldElem::one(fld);
        B.push_back(std::move(v));
      }
    } else {
      KMatrix cond(ridx.size(), std::vector<FieldElem>(N, FieldElem::zero(fld)));
      for (size_t j = 0; j < N; ++j)
        for (const auto& tm : r[j].terms()) cond[ridx[tm.first]][j] = tm.second;
      B = k_nullspace(std::move(cond), fld, N);
    }
    if (B.empty()) continue;
    const size_t v = B.size();

    // images of the basis as degree-D coefficient vectors
    KMatrix QB(N, std::vector<FieldElem>(v, FieldElem::zero(fld)));
    KMatrix BM(N, std::vector<FieldElem>(v, FieldElem::zero(fld)));
    std::vector<Poly3> Bpoly(v), QBpoly(v);
    for (size_t b = 0; b < v; ++b) {
      Poly3 curve(fld), image(fld);
      for (size_t j = 0; j < N; ++j) {
        if (B[b][j].is_zero()) continue;
        curve = curve + Poly3::monomial(fld, basis_D[j], B[b][j]);
        image = image + q[j].scaled(B[b][j]);
      }
      Bpoly[b] = curve;
      QBpoly[b] = image;
      auto cv = poly_to_vector(curve, idx_D, fld, N);
      auto iv = poly_to_vector(image, idx_D, fld, N);
      for (size_t i = 0; i < N; ++i) {
        BM[i][b] = cv[i];
        QB[i][b] = iv[i];
      }
    }

    if (v == 1) {
      // direct quotient: the one admissible curve is eigen iff image is proportional
      const Poly3 &curve = Bpoly[0], &image = QBpoly[0];
      if (curve.is_zero()) continue;
      auto lt = curve.leading();
      FieldElem lambda = image.coeff(Mono::from_key(lt.first)) * lt.second.inv();
      if (image == curve.scaled(lambda) && !lambda.is_zero()) emit(curve, lambda, P);
      continue;
    }

    // pivot columns of BM^T give v independent rows of BM
    KMatrix bt(v, std::vector<FieldElem>(N, FieldElem::zero(fld)));
    for (size_t i = 0; i < N; ++i)
      for (size_t b = 0; b < v; ++b) bt[b][i] = BM[i][b];
    KMatrix bt_copy = bt;
    std::vector<int> rowsel = k_rref(bt_copy);
    if (rowsel.size() < v) continue;  // degenerate basis (should not happen)
    KMatrix Bsq(v, std::vector<FieldElem>(v, FieldElem::zero(fld)));
    KMatrix Qsq(v, std::vector<FieldElem>(v, FieldElem::zero(fld)));
    for (size_t r2 = 0; r2 < v; ++r2)
      for (size_t c2 = 0; c2 < v; ++c2) {
        Bsq[r2][c2] = BM[static_cast<size_t>(rowsel[r2])][c2];
        Qsq[r2][c2] = QB[static_cast<size_t>(rowsel[r2])][c2];
      }
    // M = Bsq^{-1} Qsq; eigenvalues of M are the candidate lambdas
    KMatrix aug(v, std::vector<FieldElem>(2 * v, FieldElem::zero(fld)));
    for (size_t i = 0; i < v; ++i)
      for (size_t j = 0; j < v; ++j) {
        aug[i][j] = Bsq[i][j];
        aug[i][v + j] = Qsq[i][j];
      }
    if (k_rref(aug).size() < v) continue;
    KMatrix M(v, std::vector<FieldElem>(v, FieldElem::zero(fld)));
    for (size_t i = 0; i < v; ++i)
      for (size_t j = 0; j < v; ++j) M[i][j] = aug[i][v + j];
    KPoly chi = k_charpoly(M, fld);
    std::vector<FieldElem> lambdas = k_root_candidates(chi);
    KPoly cofactor = chi;
    for (const auto& lambda : lambdas) {
      // peel linear factors to expose the unresolved part
      KPoly lin(fld, {-lambda, FieldElem::one(fld)});
      while (true) {
        auto [qq, rr] = KPoly::divrem(cofactor, lin);
        if (!rr.is_zero()) break;
        cofactor = qq;
      }
      // solve (QB - lambda BM) c = 0 on the full system
      KMatrix sys(N, std::vector<FieldElem>(v, FieldElem::zero(fld)));
      for (size_t i = 0; i < N; ++i)
        for (size_t b = 0; b < v; ++b) sys[i][b] = QB[i][b] - lambda * BM[i][b];
      for (const auto& sol : k_nullspace(std::move(sys), fld, v)) {
        Poly3 curve(fld);
        for (size_t b = 0; b < v; ++b)
          if (!sol[b].is_zero()) curve = curve + Bpoly[b].scaled(sol[b]);
        if (!curve.is_zero() && !lambda.is_zero()) emit(curve, lambda, P);
      }
    }
    if (cofactor.degree() > 0)
      result.needs_extension.push_back(cofactor.to_string("t"));
  }
  return result;
}

namespace {

// homogenize the fibration pair to one common degree
std::pair<Poly3, Poly3> homog_pair(const Fibration& v) {
  int dp = std::max(v.P.degree(), 0), dq = v.Q.degree();
  int D = std::max(dp, dq);
  return {v.P.is_zero() ? v.P : v.P.homogenized(D), v.Q.homogenized(D)};
}

}  // namespace

bool check_fibration(const BiMap& f, const Fibration& v, const Mobius& psi) {
  auto [P, Q] = homog_pair(v);
  Poly3 PF = poly_subst(P, f.comp[0], f.comp[1], f.comp[2]);
  Poly3 QF = poly_subst(Q, f.comp[0], f.comp[1], f.comp[2]);
  Poly3 lhs = PF * (P.scaled(psi.w3) + Q.scaled(psi.w4));
  Poly3 rhs = (P.scaled(psi.w1) + Q.scaled(psi.w2)) * QF;
  return lhs == rhs;
}

std::optional<Mobius> find_mobius(const BiMap& f, const Fibration& v) {
  const FieldPtr& fld = f.field;
  auto [P, Q] = homog_pair(v);
  Poly3 PF = poly_subst(P, f.comp[0], f.comp[1], f.comp[2]);
  Poly3 QF = poly_subst(Q, f.comp[0], f.comp[1], f.comp[2]);
  // w3 PF*P + w4 PF*Q - w1 P*QF - w2 Q*QF = 0
  std::array<Poly3, 4> cols = {-(P * QF), -(Q * QF), PF * P, PF * Q};
  std::map<uint64_t, size_t> ridx;
  for (const auto& c : cols)
    for (const auto& tm : c.terms())
      if (!ridx.count(tm.first)) ridx[tm.first] = ridx.size();
  KMatrix m(ridx.size(), std::vector<FieldElem>(4, FieldElem::zero(fld)));
  for (size_t j = 0; j < 4; ++j)
    for (const auto& tm : cols[j].terms()) m[ridx[tm.first]][j] = tm.second;
  auto basis = k_nullspace(std::move(m), fld, 4);
  if (basis.empty()) return std::nullopt;
  if (basis.size() > 1)
    raise(ErrorCode::DegenerateSolutionSpace,
          "Möbius solution space has dimension " + std::to_string(basis.size()));
  Mobius psi{basis[0][0], basis[0][1], basis[0][2], basis[0][3]};
  if (psi.det().is_zero())
    raise(ErrorCode::DegenerateSolutionSpace, "V is constant along f (degenerate Möbius)");
  // normalization: w4 = 1 when w4 != 0, else w3 = 1
  FieldElem scale = !psi.w4.is_zero() ? psi.w4.inv() : psi.w3.inv();
  psi = {psi.w1 * scale, psi.w2 * scale, psi.w3 * scale, psi.w4 * scale};
  return psi;
}

bool check_first_integral(const BiMap& f, const Fibration& w) {
  return check_fibration(f, w, mobius_identity(f.field));
}

bool check_first_integral(const BiMap& f, const FirstIntegral& w) {
  if (!w.cert) return check_first_integral(f, w.w);
  const FirstIntegralCert& c = *w.cert;
  if (!check_fibration(f, c.base, c.psi)) return false;
  // psi^order must be the identity Möbius
  Mobius acc = mobius_identity(f.field);
  for (int i = 0; i < c.order; ++i) acc = mobius_compose(acc, c.psi);
  if (!acc.is_identity_like()) return false;
  if (c.power_form) {
    // exact power identities close the proof: W∘f = (V∘f)^m = (psi∘V)^m = W
    Poly3 pp = Poly3::constant(f.field, FieldElem::one(f.field));
    Poly3 qq = pp;
    for (int i = 0; i < c.order; ++i) {
      pp = pp * c.base.P;
      qq = qq * c.base.Q;
    }
    return w.w.P == pp && w.w.Q == qq;
  }
  // orbit products are exact by construction; the two checks above close the proof
  return true;
}

FirstIntegral build_first_integral(const BiMap& f, const Fibration& v, const Mobius& psi, int order,
                                   IntegralStyle style) {
  if (order < 1) raise(ErrorCode::InvalidParameter, "order >= 1 required");
  const FieldPtr& fld = f.field;
  Mobius acc = mobius_identity(fld);
  for (int i = 0; i < order; ++i) acc = mobius_compose(acc, psi);
  if (!acc.is_identity_like())
    raise(ErrorCode::NotFiniteOrder, "psi^order is not the identity Möbius");
  if (!check_fibration(f, v, psi))
    raise(ErrorCode::ValidationError, "V does not satisfy V∘f = psi(V)");
  if (style == IntegralStyle::Auto) style = psi.is_diagonal() ? IntegralStyle::Power : IntegralStyle::OrbitProduct;

  FirstIntegral out;
  if (style == IntegralStyle::Power) {
    if (!psi.is_diagonal()) raise(ErrorCode::InvalidParameter, "power form needs a diagonal psi");
    Poly3 pp = Poly3::constant(fld, FieldElem::one(fld));
    Poly3 qq = pp;
    for (int i = 0; i < order; ++i) {
      pp = pp * v.P;
      qq = qq * v.Q;
    }
    out.w = {std::move(pp), std::move(qq)};
    out.cert = FirstIntegralCert{v, psi, order, true};
    return out;
  }
  // orbit product over order iterates: prod_{i < order} V∘f^i
  auto [P, Q] = homog_pair(v);
  Poly3 pp = P.dehomogenized();
  Poly3 qq = Q.dehomogenized();
  BiMap it = f;  // f^1
  for (int i = 1; i < order; ++i) {
    Poly3 pi = poly_subst(P, it.comp[0], it.comp[1], it.comp[2]).dehomogenized();
    Poly3 qi = poly_subst(Q, it.comp[0], it.comp[1], it.comp[2]).dehomogenized();
    pp = pp * pi;
    qq = qq * qi;
    if (i + 1 < order) it = map_compose(it, f);
  }
  Poly3 g = poly_gcd(pp, qq);
  if (g.degree() > 0) {
    pp = poly_div_exact(pp, g);
    qq = poly_div_exact(qq, g);
  }
  out.w = {std::move(pp), std::move(qq)};
  out.cert = FirstIntegralCert{v, psi, order, false};
  return out;
}

std::optional<int> check_periodicity(const BiMap& f, int n_max, size_t term_cap) {
  if (n_max < 1) raise(ErrorCode::InvalidParameter, "n_max >= 1 required");
  auto is_identity = [](const BiMap& m) {
    if (m.degree != 1) return false;
    const Poly3 &a = m.comp[0], &b = m.comp[1], &c = m.comp[2];
    Poly3 x0 = Poly3::variable(m.field, 0), x1 = Poly3::variable(m.field, 1),
          x2 = Poly3::variable(m.field, 2);
    return a * x1 == b * x0 && a * x2 == c * x0 && b * x2 == c * x1;
  };
  BiMap cur = f;
  if (is_identity(cur)) return 1;
  for (int n = 2; n <= n_max; ++n) {
    cur = map_compose_detailed(cur, f, term_cap).map;
    if (is_identity(cur)) return n;
  }
  return std::nullopt;
}

bool transversality_check(const Fibration& v1, const Fibration& v2) {
  auto dnum = [](const Fibration& v, int var) {
    return v.P.derivative(var) * v.Q - v.P * v.Q.derivative(var);
  };
  Poly3 j = dnum(v1, 1) * dnum(v2, 2) - dnum(v1, 2) * dnum(v2, 1);
  return !j.is_zero();
}

}  // namespace birmap
