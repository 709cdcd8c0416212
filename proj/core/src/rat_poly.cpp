#include "birmap/rat_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "birmap/errors.hpp"

namespace birmap {

void RatPoly::trim_() {
  while (!c_.empty() && birmap::is_zero(c_.back())) c_.pop_back();
}

RatPoly RatPoly::monomial(int n, const Rat& c) {
  if (birmap::is_zero(c)) return RatPoly();
  std::vector<Rat> v(static_cast<size_t>(n) + 1, Rat(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (birmap::is_zero(c_[i])) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const Rat& q) const {
  RatPoly r = *this;
  for (auto& x : r.c_) x *= q;
  r.trim_();
  return r;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return RatPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading());
}

RatPoly RatPoly::pow(int e) const {
  RatPoly r = constant(Rat(1));
  RatPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) raise(ErrorCode::InvalidParameter, "division by zero polynomial");
  RatPoly rem = a;
  if (a.degree() < b.degree()) return {RatPoly(), rem};
  std::vector<Rat> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    Rat f = rem.leading() / b.leading();
    q[static_cast<size_t>(k)] = f;
    std::vector<Rat> v = rem.c_;
    for (int i = 0; i <= b.degree(); ++i) v[static_cast<size_t>(i + k)] -= f * b[i];
    rem = RatPoly(std::move(v));
  }
  return {RatPoly(std::move(q)), rem};
}

RatPoly RatPoly::div_exact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) raise(ErrorCode::NotDivisible, "univariate division left remainder " + r.to_string());
  return q;
}

RatPoly RatPoly::gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& q = c_[static_cast<size_t>(i)];
    if (birmap::is_zero(q)) continue;
    if (!first) os << (sgn(q) > 0 ? " + " : " - ");
    else if (sgn(q) < 0) os << "-";
    first = false;
    Rat a = abs(q);
    if (a != 1 || i == 0) os << rat_to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<std::pair<RatPoly, int>> squarefree_decomp(const RatPoly& p) {
  if (p.is_zero()) raise(ErrorCode::InvalidParameter, "squarefree decomposition of zero");
  std::vector<std::pair<RatPoly, int>> out;
  RatPoly f = p.monic();
  if (f.degree() == 0) return out;
  RatPoly fp = f.derivative();
  RatPoly a = RatPoly::gcd(f, fp);
  RatPoly b = RatPoly::div_exact(f, a);
  RatPoly c = RatPoly::div_exact(fp, a);
  RatPoly d = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    RatPoly g = RatPoly::gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), mult);
    b = RatPoly::div_exact(b, g);
    c = RatPoly::div_exact(d, g);
    d = c - b.derivative();
    ++mult;
  }
  return out;
}

Rat root_bound(const RatPoly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat lead = abs(p.leading());
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rat(abs(p[i]) / lead));
  return m + 1;
}

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> s;
  s.push_back(p);
  s.push_back(p.derivative());
  while (!s.back().is_zero() && s.back().degree() >= 0) {
    RatPoly r = RatPoly::divrem(s[s.size() - 2], s.back()).second;
    if (r.is_zero()) break;
    s.push_back(-r);
    if (s.back().degree() == 0) break;
  }
  return s;
}

int variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

void isolate_rec(const std::vector<RatPoly>& chain, const Rat& lo, const Rat& hi, int vlo, int vhi,
                 const Rat& width, std::vector<RatInterval>& out) {
  int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1 && hi - lo <= width) {
    out.push_back({lo, hi});
    return;
  }
  Rat mid = (lo + hi) / 2;
  // a root sitting exactly on the midpoint belongs to the left half-open interval
  int vmid = variations_at(chain, mid);
  isolate_rec(chain, lo, mid, vlo, vmid, width, out);
  isolate_rec(chain, mid, hi, vmid, vhi, width, out);
}

}  // namespace

int sturm_count(const RatPoly& p, const Rat& lo, const Rat& hi) {
  auto chain = sturm_chain(p);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

std::vector<RatInterval> sturm_isolate(const RatPoly& p, const Rat& lo, const Rat& hi, const Rat& width) {
  if (p.is_zero()) raise(ErrorCode::InvalidParameter, "sturm_isolate on zero polynomial");
  if (!(lo < hi) || sgn(width) <= 0) raise(ErrorCode::InvalidParameter, "need lo < hi and width > 0");
  auto chain = sturm_chain(p);
  std::vector<RatInterval> out;
  isolate_rec(chain, lo, hi, variations_at(chain, lo), variations_at(chain, hi), width, out);
  std::sort(out.begin(), out.end(), [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
  return out;
}

std::optional<int> cyclotomic_test(const RatPoly& p) {
  if (p.degree() < 1) raise(ErrorCode::InvalidParameter, "cyclotomic_test needs a nonconstant polynomial");
  const int n = p.degree();
  // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2 n^2 + 1
  const int dmax = 2 * n * n + 1;
  std::vector<int> phi(static_cast<size_t>(dmax) + 1);
  for (int i = 0; i <= dmax; ++i) phi[static_cast<size_t>(i)] = i;
  for (int i = 2; i <= dmax; ++i)
    if (phi[static_cast<size_t>(i)] == i)
      for (int j = i; j <= dmax; j += i) phi[static_cast<size_t>(j)] -= phi[static_cast<size_t>(j)] / i;

  RatPoly q = p.monic();
  long long lcm = 1;
  for (int d = 1; d <= dmax && q.degree() > 0; ++d) {
    if (phi[static_cast<size_t>(d)] > n) continue;
    RatPoly xd1 = RatPoly::monomial(d, Rat(1)) - RatPoly::constant(Rat(1));
    RatPoly g = RatPoly::gcd(q, xd1);
    if (g.degree() > 0) {
      lcm = std::lcm(lcm, static_cast<long long>(d));
      q = RatPoly::div_exact(q, g);
    }
  }
  if (q.degree() > 0) return std::nullopt;
  // verify exactly, then descend the divisor lattice to the minimal period
  auto divides_xn1 = [&](long long N) {
    RatPoly xn1 = RatPoly::monomial(static_cast<int>(N), Rat(1)) - RatPoly::constant(Rat(1));
    return RatPoly::divrem(xn1, p.monic()).second.is_zero();
  };
  if (!divides_xn1(lcm)) return std::nullopt;
  bool changed = true;
  while (changed) {
    changed = false;
    for (long long d = 2; d * d <= lcm; ++d) {
      if (lcm % d) continue;
      if (divides_xn1(lcm / d)) {
        lcm /= d;
        changed = true;
        break;
      }
    }
  }
  return static_cast<int>(lcm);
}

namespace {
mpz_class floor_rat(const Rat& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}
}  // namespace

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) raise(ErrorCode::InvalidParameter, "empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  // 0 < lo <= hi: Stern-Brocot / continued-fraction descent
  mpz_class fl = floor_rat(lo);
  if (Rat(fl) == lo) return lo;
  mpz_class fl1 = fl + 1;
  if (Rat(fl1) <= hi) return Rat(fl1);
  Rat inner = simplest_rational_between(Rat(1) / (hi - Rat(fl)), Rat(1) / (lo - Rat(fl)));
  return Rat(fl) + Rat(1) / inner;
}

std::vector<Rat> rational_roots(const RatPoly& p) {
  std::vector<Rat> out;
  if (p.degree() < 1) return out;
  RatPoly f = p;
  // strip x^v
  int v = 0;
  while (!f.is_zero() && birmap::is_zero(f[0])) {
    std::vector<Rat> c(f.coeffs().begin() + 1, f.coeffs().end());
    f = RatPoly(std::move(c));
    ++v;
  }
  if (v > 0) out.push_back(Rat(0));
  if (f.degree() < 1) return out;
  // squarefree part
  RatPoly g = RatPoly::gcd(f, f.derivative());
  RatPoly sf = g.degree() > 0 ? RatPoly::div_exact(f, g) : f;
  sf = sf.monic();
  // clear denominators to bound root denominators by the leading coefficient
  mpz_class den(1);
  for (const Rat& q : sf.coeffs()) den = lcm(den, q.get_den());
  mpz_class lead = sf.leading().get_num() * den / sf.leading().get_den();
  Rat B = root_bound(sf);
  // a rational root u/w (lowest terms) has w | lead; distinct such rationals are
  // >= 1/lead^2 apart, so width below that pins at most one candidate per interval
  Rat width = Rat(1, lead * lead * 4);
  auto ivs = sturm_isolate(sf, -B, B, width);
  for (const auto& iv : ivs) {
    Rat cand = simplest_rational_between(iv.lo, iv.hi);
    if (birmap::is_zero(sf.eval(cand))) out.push_back(cand);
    else if (birmap::is_zero(sf.eval(iv.lo))) out.push_back(iv.lo);
    else if (birmap::is_zero(sf.eval(iv.hi))) out.push_back(iv.hi);
  }
  std::sort(out.begin(), out.end(), [](const Rat& a, const Rat& b) { return a < b; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace birmap
