#include "birmap/poly3.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "birmap/errors.hpp"

namespace birmap {

// ---------- KPoly ----------

void KPoly::trim_() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

KPoly KPoly::constant(const FieldElem& a) { return KPoly(a.field(), {a}); }

KPoly KPoly::monomial(const FieldPtr& f, int n, const FieldElem& a) {
  std::vector<FieldElem> c(static_cast<size_t>(n) + 1, FieldElem::zero(f));
  c.back() = a;
  return KPoly(f, std::move(c));
}

KPoly KPoly::operator-() const {
  KPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

KPoly KPoly::operator+(const KPoly& o) const {
  const FieldPtr& f = field_ ? field_ : o.field_;
  std::vector<FieldElem> c(std::max(c_.size(), o.c_.size()), FieldElem::zero(f));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return KPoly(f, std::move(c));
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
  const FieldPtr& f = field_ ? field_ : o.field_;
  if (is_zero() || o.is_zero()) return KPoly(f);
  std::vector<FieldElem> c(c_.size() + o.c_.size() - 1, FieldElem::zero(f));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) FieldElem::addmul(c[i + j], c_[i], o.c_[j]);
  }
  return KPoly(f, std::move(c));
}

KPoly KPoly::scaled(const FieldElem& a) const {
  KPoly r = *this;
  for (auto& x : r.c_) x = x * a;
  r.trim_();
  return r;
}

bool KPoly::operator==(const KPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

FieldElem KPoly::eval(const FieldElem& x) const {
  FieldElem acc = FieldElem::zero(field_ ? field_ : x.field());
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
  return acc;
}

KPoly KPoly::derivative() const {
  if (degree() < 1) return KPoly(field_);
  std::vector<FieldElem> c(c_.size() - 1, FieldElem::zero(field_));
  for (size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = c_[i].scaled(Rat(static_cast<long>(i)));
  return KPoly(field_, std::move(c));
}

KPoly KPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inv());
}

std::pair<KPoly, KPoly> KPoly::divrem(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) raise(ErrorCode::InvalidParameter, "division by zero polynomial");
  const FieldPtr& f = b.field();
  KPoly rem = a;
  if (a.degree() < b.degree()) return {KPoly(f), rem};
  std::vector<FieldElem> q(static_cast<size_t>(a.degree() - b.degree()) + 1, FieldElem::zero(f));
  FieldElem linv = b.leading().inv();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    FieldElem fct = rem.leading() * linv;
    q[static_cast<size_t>(k)] = fct;
    std::vector<FieldElem> v = rem.coeffs();
    for (int i = 0; i <= b.degree(); ++i) v[static_cast<size_t>(i + k)] -= fct * b[i];
    rem = KPoly(f, std::move(v));
  }
  return {KPoly(f, std::move(q)), rem};
}

KPoly KPoly::div_exact(const KPoly& a, const KPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) raise(ErrorCode::NotDivisible, "univariate division left a remainder");
  return q;
}

namespace {
// strip the common rational scale of every coordinate; keeps primitive Euclid
// remainders from stacking denominators over number fields
KPoly rational_primitive_k(const KPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num(0), den(1);
  for (const auto& e : p.coeffs())
    for (const Rat& q : e.coeffs()) {
      if (is_zero(q)) continue;
      num = gcd(num, q.get_num());
      den = lcm(den, q.get_den());
    }
  if (num == 0) return p;
  Rat scale(den, num);
  scale.canonicalize();
  std::vector<FieldElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& e : p.coeffs()) c.push_back(e.scaled(scale));
  return KPoly(p.field(), std::move(c));
}
}  // namespace

KPoly KPoly::gcd(const KPoly& a, const KPoly& b) {
  KPoly x = rational_primitive_k(a), y = rational_primitive_k(b);
  while (!y.is_zero()) {
    KPoly r = divrem(x, y).second;
    x = std::move(y);
    y = rational_primitive_k(r);
  }
  return x.is_zero() ? x : x.monic();
}

std::string KPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[static_cast<size_t>(i)].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[static_cast<size_t>(i)].to_string();
    if (i > 0) os << "*" << var << "^" << i;
  }
  return os.str();
}

// ---------- Poly3 ----------

void Poly3::normalize_() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& tm : t_) {
    if (!out.empty() && out.back().first == tm.first) out.back().second += tm.second;
    else out.push_back(std::move(tm));
  }
  t_.clear();
  for (auto& tm : out)
    if (!tm.second.is_zero()) t_.push_back(std::move(tm));
}

Poly3 Poly3::constant(const FieldPtr& f, const FieldElem& a) {
  Poly3 p(f);
  if (!a.is_zero()) p.t_.push_back({Mono{0, 0, 0}.key(), a});
  return p;
}

Poly3 Poly3::monomial(const FieldPtr& f, Mono m, const FieldElem& a) {
  Poly3 p(f);
  if (!a.is_zero()) p.t_.push_back({m.key(), a});
  return p;
}

Poly3 Poly3::variable(const FieldPtr& f, int var) {
  Mono m;
  (var == 0 ? m.e0 : var == 1 ? m.e1 : m.e2) = 1;
  return monomial(f, m, FieldElem::one(f));
}

Poly3 Poly3::from_terms(const FieldPtr& f, std::vector<std::tuple<int, int, int, FieldElem>> terms) {
  Poly3 p(f);
  for (auto& [e0, e1, e2, c] : terms) p.t_.push_back({Mono{e0, e1, e2}.key(), std::move(c)});
  p.normalize_();
  return p;
}

Poly3 apoly_from_terms(const FieldPtr& f, std::vector<std::tuple<int, int, FieldElem>> xy_terms) {
  std::vector<std::tuple<int, int, int, FieldElem>> terms;
  terms.reserve(xy_terms.size());
  for (auto& [ex, ey, c] : xy_terms) terms.emplace_back(0, ex, ey, std::move(c));
  return Poly3::from_terms(f, std::move(terms));
}

int Poly3::degree() const { return t_.empty() ? -1 : Mono::from_key(t_.back().first).total(); }

bool Poly3::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = Mono::from_key(t_.front().first).total();
  return d == Mono::from_key(t_.back().first).total();
}

FieldElem Poly3::coeff(const Mono& m) const {
  uint64_t k = m.key();
  auto it = std::lower_bound(t_.begin(), t_.end(), k,
                             [](const Term& t, uint64_t key) { return t.first < key; });
  if (it != t_.end() && it->first == k) return it->second;
  return FieldElem::zero(field_);
}

Poly3 Poly3::operator-() const {
  Poly3 r = *this;
  for (auto& tm : r.t_) tm.second = -tm.second;
  return r;
}

Poly3 Poly3::operator+(const Poly3& o) const {
  Poly3 r(field_ ? field_ : o.field_);
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j >= o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) r.t_.push_back(t_[i++]);
    else if (i >= t_.size() || o.t_[j].first < t_[i].first) r.t_.push_back(o.t_[j++]);
    else {
      FieldElem s = t_[i].second + o.t_[j].second;
      if (!s.is_zero()) r.t_.push_back({t_[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly3 Poly3::operator-(const Poly3& o) const { return *this + (-o); }

Poly3 Poly3::operator*(const Poly3& o) const {
  const FieldPtr& f = field_ ? field_ : o.field_;
  Poly3 r(f);
  if (is_zero() || o.is_zero()) return r;
  std::unordered_map<uint64_t, FieldElem> acc;
  acc.reserve(t_.size() * 2);
  const Poly3& big = t_.size() >= o.t_.size() ? *this : o;
  const Poly3& small = t_.size() >= o.t_.size() ? o : *this;
  for (const auto& ts : small.t_) {
    Mono ms = Mono::from_key(ts.first);
    for (const auto& tb : big.t_) {
      Mono mb = Mono::from_key(tb.first);
      uint64_t k = Mono{ms.e0 + mb.e0, ms.e1 + mb.e1, ms.e2 + mb.e2}.key();
      FieldElem::addmul(acc[k], ts.second, tb.second);
    }
  }
  r.t_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!(c.field() == nullptr) && !c.is_zero()) r.t_.push_back({k, std::move(c)});
  std::sort(r.t_.begin(), r.t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  return r;
}

Poly3 Poly3::scaled(const FieldElem& a) const {
  if (a.is_zero()) return Poly3(field_);
  Poly3 r = *this;
  for (auto& tm : r.t_) tm.second = tm.second * a;
  return r;
}

Poly3 Poly3::scaled_rat(const Rat& q) const {
  if (birmap::is_zero(q)) return Poly3(field_);
  Poly3 r = *this;
  for (auto& tm : r.t_) tm.second = tm.second.scaled(q);
  return r;
}

bool Poly3::operator==(const Poly3& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].first != o.t_[i].first || t_[i].second != o.t_[i].second) return false;
  return true;
}

Poly3 Poly3::mul_mono(const Mono& m, const FieldElem& a) const {
  Poly3 r(field_);
  if (a.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (const auto& tm : t_) {
    Mono mm = Mono::from_key(tm.first);
    FieldElem c = tm.second * a;
    if (!c.is_zero()) r.t_.push_back({Mono{mm.e0 + m.e0, mm.e1 + m.e1, mm.e2 + m.e2}.key(), std::move(c)});
  }
  return r;
}

Poly3 Poly3::derivative(int var) const {
  Poly3 r(field_);
  for (const auto& tm : t_) {
    Mono m = Mono::from_key(tm.first);
    int e = var == 0 ? m.e0 : var == 1 ? m.e1 : m.e2;
    if (e == 0) continue;
    Mono md = m;
    (var == 0 ? md.e0 : var == 1 ? md.e1 : md.e2) = e - 1;
    r.t_.push_back({md.key(), tm.second.scaled(Rat(e))});
  }
  r.normalize_();
  return r;
}

FieldElem Poly3::eval(const std::array<FieldElem, 3>& x) const {
  FieldElem acc = FieldElem::zero(field_);
  // cache powers
  int m0 = 0, m1 = 0, m2 = 0;
  for (const auto& tm : t_) {
    Mono m = Mono::from_key(tm.first);
    m0 = std::max(m0, m.e0);
    m1 = std::max(m1, m.e1);
    m2 = std::max(m2, m.e2);
  }
  auto powers = [](const FieldElem& b, int n) {
    std::vector<FieldElem> p;
    p.push_back(FieldElem::one(b.field()));
    for (int i = 1; i <= n; ++i) p.push_back(p.back() * b);
    return p;
  };
  auto p0 = powers(x[0], m0), p1 = powers(x[1], m1), p2 = powers(x[2], m2);
  for (const auto& tm : t_) {
    Mono m = Mono::from_key(tm.first);
    acc += tm.second * p0[static_cast<size_t>(m.e0)] * p1[static_cast<size_t>(m.e1)] *
           p2[static_cast<size_t>(m.e2)];
  }
  return acc;
}

FieldElem Poly3::eval_xy(const FieldElem& x, const FieldElem& y) const {
  return eval({FieldElem::one(x.field()), x, y});
}

Poly3 Poly3::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().second.inv());
}

Poly3 Poly3::rational_primitive() const {
  if (is_zero()) return *this;
  mpz_class num(0), den(1);
  for (const auto& tm : t_)
    for (const Rat& q : tm.second.coeffs()) {
      if (birmap::is_zero(q)) continue;
      num = gcd(num, q.get_num());
      den = lcm(den, q.get_den());
    }
  if (num == 0) return *this;
  Rat scale(den, num);
  scale.canonicalize();
  // keep the graded-lex leading coordinate sign positive for a stable normal form
  Poly3 r = scaled_rat(scale);
  for (const Rat& q : r.t_.back().second.coeffs()) {
    int s = sgn(q);
    if (s > 0) break;
    if (s < 0) {
      r = -r;
      break;
    }
  }
  return r;
}

int Poly3::var_valuation(int var) const {
  if (is_zero()) return 0;
  int v = 1 << 20;
  for (const auto& tm : t_) {
    Mono m = Mono::from_key(tm.first);
    v = std::min(v, var == 0 ? m.e0 : var == 1 ? m.e1 : m.e2);
    if (v == 0) break;
  }
  return v;
}

Poly3 Poly3::shift_var(int var, int by) const {
  if (by == 0) return *this;
  Poly3 r(field_);
  r.t_.reserve(t_.size());
  for (const auto& tm : t_) {
    Mono m = Mono::from_key(tm.first);
    int& e = var == 0 ? m.e0 : var == 1 ? m.e1 : m.e2;
    e += by;
    if (e < 0) raise(ErrorCode::NotDivisible, "negative exponent in shift_var");
    r.t_.push_back({m.key(), tm.second});
  }
  r.normalize_();
  return r;
}

Poly3 Poly3::homogenized(int target_degree) const {
  Poly3 r(field_);
  r.t_.reserve(t_.size());
  for (const auto& tm : t_) {
    Mono m = Mono::from_key(tm.first);
    if (m.e0 != 0) raise(ErrorCode::InvalidParameter, "homogenized() expects e0 = 0 terms");
    if (m.e1 + m.e2 > target_degree) raise(ErrorCode::DegreeMismatch, "degree exceeds homogenization target");
    m.e0 = target_degree - m.e1 - m.e2;
    r.t_.push_back({m.key(), tm.second});
  }
  r.normalize_();
  return r;
}

Poly3 Poly3::dehomogenized() const {
  Poly3 r(field_);
  r.t_.reserve(t_.size());
  for (const auto& tm : t_) {
    Mono m = Mono::from_key(tm.first);
    m.e0 = 0;
    r.t_.push_back({m.key(), tm.second});
  }
  r.normalize_();
  return r;
}

std::string Poly3::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    Mono m = Mono::from_key(it->first);
    if (!first) os << " + ";
    first = false;
    os << it->second.to_string();
    if (m.e0) os << "*x0^" << m.e0;
    if (m.e1) os << "*x1^" << m.e1;
    if (m.e2) os << "*x2^" << m.e2;
  }
  return os.str();
}

namespace {

// shared single-divisor division on an ordered working remainder; near-linear
// in the number of terms for small divisors
struct DivisionRun {
  Poly3 quotient, remainder;
  bool exact = true;
  std::string witness;
};

DivisionRun run_division(const Poly3& a, const Poly3& b, bool collect_remainder, bool stop_on_mismatch) {
  const FieldPtr& f = b.field();
  DivisionRun out;
  out.quotient = Poly3(f);
  out.remainder = Poly3(f);
  if (a.is_zero()) return out;
  std::map<uint64_t, FieldElem, std::greater<uint64_t>> work;
  for (const auto& tm : a.terms()) work.emplace(tm.first, tm.second);
  Mono lb = Mono::from_key(b.leading().first);
  FieldElem linv = b.leading().second.inv();
  std::vector<Poly3::Term> qterms, rterms;
  while (!work.empty()) {
    auto it = work.begin();
    uint64_t lk = it->first;
    FieldElem lc = std::move(it->second);
    work.erase(it);
    if (lc.is_zero()) continue;
    Mono lm = Mono::from_key(lk);
    if (!lb.divides(lm)) {
      if (stop_on_mismatch) {
        out.exact = false;
        out.witness = lc.to_string() + "*[" + std::to_string(lm.e0) + "," + std::to_string(lm.e1) +
                      "," + std::to_string(lm.e2) + "]";
        return out;
      }
      out.exact = false;
      if (collect_remainder) rterms.push_back({lk, std::move(lc)});
      continue;
    }
    Mono d{lm.e0 - lb.e0, lm.e1 - lb.e1, lm.e2 - lb.e2};
    FieldElem c = lc * linv;
    qterms.push_back({d.key(), c});
    bool first = true;
    for (const auto& tb : b.terms()) {
      Mono mb = Mono::from_key(tb.first);
      uint64_t k = Mono{mb.e0 + d.e0, mb.e1 + d.e1, mb.e2 + d.e2}.key();
      if (k == lk && first) continue;  // the leading term cancels by construction
      auto [pos, fresh] = work.try_emplace(k, FieldElem::zero(f));
      pos->second -= c * tb.second;
      if (pos->second.is_zero()) work.erase(pos);
    }
    first = false;
  }
  std::sort(qterms.begin(), qterms.end(),
            [](const Poly3::Term& x, const Poly3::Term& y) { return x.first < y.first; });
  std::sort(rterms.begin(), rterms.end(),
            [](const Poly3::Term& x, const Poly3::Term& y) { return x.first < y.first; });
  std::vector<std::tuple<int, int, int, FieldElem>> qt, rt;
  for (auto& t : qterms) {
    Mono m = Mono::from_key(t.first);
    qt.emplace_back(m.e0, m.e1, m.e2, std::move(t.second));
  }
  for (auto& t : rterms) {
    Mono m = Mono::from_key(t.first);
    rt.emplace_back(m.e0, m.e1, m.e2, std::move(t.second));
  }
  out.quotient = Poly3::from_terms(f, std::move(qt));
  out.remainder = Poly3::from_terms(f, std::move(rt));
  return out;
}

}  // namespace

std::pair<Poly3, Poly3> poly_divmod(const Poly3& a, const Poly3& b) {
  if (b.is_zero()) raise(ErrorCode::InvalidParameter, "division by zero polynomial");
  DivisionRun run = run_division(a, b, true, false);
  return {std::move(run.quotient), std::move(run.remainder)};
}

Poly3 poly_div_exact(const Poly3& a, const Poly3& b) {
  if (b.is_zero()) raise(ErrorCode::InvalidParameter, "division by zero polynomial");
  DivisionRun run = run_division(a, b, false, true);
  if (!run.exact) raise(ErrorCode::NotDivisible, "witness remainder term " + run.witness);
  return std::move(run.quotient);
}

std::optional<Poly3> poly_try_div(const Poly3& a, const Poly3& b) {
  if (b.is_zero()) return std::nullopt;
  DivisionRun run = run_division(a, b, false, true);
  if (!run.exact) return std::nullopt;
  return std::move(run.quotient);
}

// ---------- substitution ----------

Poly3 poly_subst(const Poly3& c, const Poly3& fx, const Poly3& fy, const Poly3& fz) {
  const FieldPtr& f = c.field() ? c.field() : fx.field();
  if (c.is_zero()) return Poly3::zero(f);
  int d = fx.degree();
  if (fy.degree() != d || fz.degree() != d)
    raise(ErrorCode::DegreeMismatch, "substituted components must share one degree");

  // c = sum_k x2^k ( sum_j x1^j ( sum_i c_{ijk} x0^i ) ); Horner outside-in over
  // fz then fy, with cached powers of fx for the innermost sums.
  std::map<int, std::map<int, std::map<int, FieldElem>>> levels;
  int max_e0 = 0;
  for (const auto& tm : c.terms()) {
    Mono m = Mono::from_key(tm.first);
    levels[m.e2][m.e1][m.e0] = tm.second;
    max_e0 = std::max(max_e0, m.e0);
  }
  std::vector<Poly3> fx_pow;
  fx_pow.push_back(Poly3::constant(f, FieldElem::one(f)));
  for (int i = 1; i <= max_e0; ++i) fx_pow.push_back(fx_pow.back() * fx);

  int max_k = levels.rbegin()->first;
  Poly3 acc(f);
  for (int k = max_k; k >= 0; --k) {
    if (k != max_k) acc = acc * fz;
    auto itk = levels.find(k);
    if (itk == levels.end()) continue;
    // inner two-variable Horner over fy
    int max_j = itk->second.rbegin()->first;
    Poly3 inner(f);
    for (int j = max_j; j >= 0; --j) {
      if (j != max_j) inner = inner * fy;
      auto itj = itk->second.find(j);
      if (itj == itk->second.end()) continue;
      for (const auto& [i, coeffv] : itj->second) inner = inner + fx_pow[static_cast<size_t>(i)].scaled(coeffv);
    }
    acc = acc + inner;
  }
  return acc;
}

// ---------- gcd ----------

namespace {

// bivariate view: polynomial in x2 with KPoly-in-x1 coefficients
using BiPoly = std::vector<KPoly>;

void bi_trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BiPoly to_bi(const Poly3& p, const FieldPtr& f) {
  BiPoly out;
  for (const auto& tm : p.terms()) {
    Mono m = Mono::from_key(tm.first);
    if (static_cast<size_t>(m.e2) >= out.size()) out.resize(static_cast<size_t>(m.e2) + 1, KPoly(f));
    out[static_cast<size_t>(m.e2)] =
        out[static_cast<size_t>(m.e2)] + KPoly::monomial(f, m.e1, tm.second);
  }
  bi_trim(out);
  return out;
}

Poly3 from_bi(const BiPoly& p, const FieldPtr& f) {
  std::vector<std::tuple<int, int, int, FieldElem>> terms;
  for (size_t k = 0; k < p.size(); ++k)
    for (int j = 0; j <= p[k].degree(); ++j)
      if (!p[k][j].is_zero()) terms.emplace_back(0, j, static_cast<int>(k), p[k][j]);
  return Poly3::from_terms(f, std::move(terms));
}

KPoly bi_content(const BiPoly& p) {
  KPoly g = p.empty() ? KPoly() : KPoly(p[0].field());
  for (const auto& c : p) g = KPoly::gcd(g, c);
  return g;
}

BiPoly bi_div_k(const BiPoly& p, const KPoly& d) {
  BiPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(KPoly::div_exact(c, d));
  return out;
}

BiPoly bi_scale(const BiPoly& p, const KPoly& s) {
  BiPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c * s);
  return out;
}

BiPoly bi_sub(const BiPoly& a, const BiPoly& b) {
  BiPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < out.size(); ++i) {
    KPoly x = i < a.size() ? a[i] : KPoly();
    KPoly y = i < b.size() ? b[i] : KPoly();
    out[i] = x - y;
  }
  bi_trim(out);
  return out;
}

BiPoly bi_shift_mul(const BiPoly& p, int k, const KPoly& c) {
  BiPoly out(p.size() + static_cast<size_t>(k));
  for (size_t i = 0; i < p.size(); ++i) out[i + static_cast<size_t>(k)] = p[i] * c;
  return out;
}

// pseudo-remainder of a by b in (K[x1])[x2]
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  const KPoly& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    KPoly la = a.back();
    a = bi_sub(bi_scale(a, lb), bi_shift_mul(b, da - db, la));
    bi_trim(a);
    if (static_cast<int>(a.size()) - 1 >= da) break;  // top term must drop each round
  }
  return a;
}

BiPoly bi_primitive(const BiPoly& p) {
  if (p.empty()) return p;
  KPoly c = bi_content(p);
  return bi_div_k(p, c);
}

BiPoly bi_gcd(BiPoly a, BiPoly b) {
  bi_trim(a);
  bi_trim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  KPoly ca = bi_content(a), cb = bi_content(b);
  KPoly d = KPoly::gcd(ca, cb);
  a = bi_div_k(a, ca);
  b = bi_div_k(b, cb);
  while (true) {
    BiPoly r = bi_prem(a, b);
    bi_trim(r);
    if (r.empty()) break;
    if (r.size() == 1) {
      // nontrivial in x2 direction exhausted: only the content survives
      b = {KPoly::constant(FieldElem::one(d.field() ? d.field() : r[0].field()))};
      break;
    }
    a = std::move(b);
    b = bi_primitive(r);
  }
  b = bi_primitive(b);
  if (d.degree() > 0) b = bi_scale(b, d);  // x1-content gcd multiplies back in
  return b;
}

}  // namespace

Poly3 poly_gcd(const Poly3& a, const Poly3& b) {
  const FieldPtr f = a.field() ? a.field() : b.field();
  if (a.is_zero() && b.is_zero()) raise(ErrorCode::InvalidParameter, "gcd(0, 0)");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (!a.is_homogeneous() || !b.is_homogeneous()) {
    // affine bivariate inputs (e0 = 0 everywhere) are handled by the same PRS
    BiPoly g = bi_gcd(to_bi(a, f), to_bi(b, f));
    return from_bi(g, f).monic();
  }
  int va = a.var_valuation(0), vb = b.var_valuation(0);
  Poly3 ar = a.shift_var(0, -va).dehomogenized();
  Poly3 br = b.shift_var(0, -vb).dehomogenized();
  BiPoly g2 = bi_gcd(to_bi(ar, f), to_bi(br, f));
  Poly3 g = from_bi(g2, f);
  g = g.homogenized(g.degree()).shift_var(0, std::min(va, vb));
  return g.monic();
}

}  // namespace birmap
