#include "birmap/number_field.hpp"

#include <sstream>

#include "birmap/errors.hpp"

namespace birmap {

Rat rat_from_string(const std::string& s) {
  auto bad = [&] { raise(ErrorCode::ParseError, "bad rational '" + s + "'"); };
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) bad();
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(t);
      return Rat(n);
    }
    mpz_class n(t.substr(0, slash)), d(t.substr(slash + 1));
    if (d == 0) bad();
    Rat q(n, d);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    bad();
  }
  return Rat();
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rat(0);
  mpz_class n = q.get_num(), d = q.get_den();
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 2)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 2)) return std::nullopt;
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

std::string NumberField::describe() const {
  if (is_rational()) return "Q";
  std::ostringstream os;
  os << "Q[a]/([";
  for (size_t i = 0; i < mod_.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(mod_[i]);
  }
  os << "])";
  return os.str();
}

const FieldPtr& NumberField::rationals() {
  static const FieldPtr q(new NumberField({Rat(0), Rat(1)}));
  return q;
}

FieldPtr NumberField::make(std::vector<Rat> modulus) {
  while (modulus.size() > 1 && is_zero(modulus.back())) modulus.pop_back();
  if (modulus.size() < 2) raise(ErrorCode::InvalidParameter, "modulus must have degree >= 1");
  if (modulus.back() != 1) raise(ErrorCode::InvalidParameter, "modulus must be monic");
  if (modulus.size() == 2 && is_zero(modulus.front())) return rationals();
  return FieldPtr(new NumberField(std::move(modulus)));
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != field_->degree())
    raise(ErrorCode::InvalidParameter, "coefficient vector length must equal the field degree");
}

FieldElem FieldElem::zero(const FieldPtr& f) { return FieldElem(f, std::vector<Rat>(f->degree(), Rat(0))); }

FieldElem FieldElem::one(const FieldPtr& f) { return from_rat(f, Rat(1)); }

FieldElem FieldElem::from_rat(const FieldPtr& f, const Rat& q) {
  std::vector<Rat> c(f->degree(), Rat(0));
  c[0] = q;
  return FieldElem(f, std::move(c));
}

FieldElem FieldElem::gen(const FieldPtr& f) {
  if (f->degree() < 2) raise(ErrorCode::InvalidParameter, "generator needs degree >= 2");
  std::vector<Rat> c(f->degree(), Rat(0));
  c[1] = 1;
  return FieldElem(f, std::move(c));
}

bool FieldElem::is_zero() const {
  for (const auto& q : c_)
    if (!birmap::is_zero(q)) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!birmap::is_zero(c_[i])) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!birmap::is_zero(c_[i])) return false;
  return true;
}

Rat FieldElem::rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field() == b.field()) return;
  if (a.field() && b.field() && a.field()->same(*b.field())) return;
  raise(ErrorCode::FieldMismatch, "operands live in different number fields");
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  FieldElem r = *this;
  r += o;
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  FieldElem r = *this;
  r -= o;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  require_same_field(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  require_same_field(*this, o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

void FieldElem::reduce_(std::vector<Rat>& w) const {
  // fold a^i for i >= e using a^e = -(m_0 + m_1 a + ... + m_{e-1} a^{e-1})
  const auto& m = field_->modulus();
  const int e = field_->degree();
  for (int i = static_cast<int>(w.size()) - 1; i >= e; --i) {
    if (birmap::is_zero(w[i])) continue;
    Rat top = w[i];
    w[i] = 0;
    for (int j = 0; j < e; ++j) {
      if (!birmap::is_zero(m[j])) w[i - e + j] -= top * m[j];
    }
  }
  w.resize(e);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_field(*this, o);
  const int e = field_->degree();
  if (e == 1) {
    FieldElem r = *this;
    r.c_[0] *= o.c_[0];
    return r;
  }
  std::vector<Rat> w(2 * e - 1, Rat(0));
  for (int i = 0; i < e; ++i) {
    if (birmap::is_zero(c_[i])) continue;
    for (int j = 0; j < e; ++j) {
      if (birmap::is_zero(o.c_[j])) continue;
      w[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_(w);
  return FieldElem(field_, std::move(w));
}

void FieldElem::addmul(FieldElem& dst, const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (dst.field_ == nullptr) dst = FieldElem::zero(a.field());
  if (a.field()->degree() == 1) {
    dst.c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  dst += a * b;
}

FieldElem FieldElem::scaled(const Rat& q) const {
  FieldElem r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  require_same_field(*this, o);
  return c_ == o.c_;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) raise(ErrorCode::ZeroInverse, "inverse of zero");
  const int e = field_->degree();
  if (e == 1) return FieldElem(field_, {Rat(1) / c_[0]});

  // extended Euclid on (a, m) in Q[x]
  using P = std::vector<Rat>;
  auto deg = [](const P& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (!birmap::is_zero(p[i])) return i;
    return -1;
  };
  auto trim = [&](P& p) { p.resize(static_cast<size_t>(deg(p) + 1)); };
  P r0 = field_->modulus();
  P r1 = c_;
  trim(r1);
  P s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients of a in the Bezout identity
  while (deg(r1) > 0) {
    // divide r0 by r1
    P q(static_cast<size_t>(deg(r0) - deg(r1) + 1), Rat(0));
    P rem = r0;
    while (deg(rem) >= deg(r1)) {
      int k = deg(rem) - deg(r1);
      Rat f = rem[deg(rem)] / r1[deg(r1)];
      q[k] += f;
      for (int i = 0; i <= deg(r1); ++i) rem[i + k] -= f * r1[i];
      trim(rem);
      if (deg(rem) < 0) break;
    }
    P s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    trim(s1);
    if (deg(r1) < 0) break;
  }
  if (deg(r1) != 0) {
    // non-constant gcd: the modulus is reducible and this element witnesses it
    raise(ErrorCode::ReducibleModulus, "zero divisor in " + field_->describe());
  }
  Rat lead = r1[0];
  std::vector<Rat> out(static_cast<size_t>(e), Rat(0));
  for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / lead;
  return FieldElem(field_, std::move(out));
}

FieldElem FieldElem::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  FieldElem r = one(field_);
  FieldElem b = *this;
  unsigned long e = static_cast<unsigned long>(n);
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::string FieldElem::to_string() const {
  if (field_->is_rational()) return rat_to_string(c_[0]);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << rat_to_string(c_[i]);
  }
  os << "]";
  return os.str();
}

std::optional<FieldElem> field_sqrt(const FieldElem& a) {
  const FieldPtr& f = a.field();
  if (a.is_zero()) return FieldElem::zero(f);
  if (a.is_rational()) {
    if (auto r = rat_sqrt(a.rational_part())) return FieldElem::from_rat(f, *r);
    if (f->degree() != 2) return std::nullopt;
  }
  if (f->degree() != 2) return std::nullopt;
  // s = s0 + s1 a over Q[a]/(a^2 + p a + q): match coordinates of s^2 = D
  const Rat p = f->modulus()[1], q = f->modulus()[0];
  const Rat d0 = a.coeffs()[0], d1 = a.coeffs()[1];
  auto mk = [&](const Rat& s0, const Rat& s1) { return FieldElem(f, {s0, s1}); };
  if (is_zero(d1)) {
    if (auto s0 = rat_sqrt(d0)) return mk(*s0, Rat(0));
    // s0 = p*s1/2, (p^2/4 - q) s1^2 = d0
    Rat cc = p * p / 4 - q;
    if (!is_zero(cc)) {
      if (auto s1 = rat_sqrt(d0 / cc)) return mk(p * (*s1) / 2, *s1);
    }
    return std::nullopt;
  }
  // s1 != 0: z = s1^2 solves (p^2-4q) z^2 + (2 p d1 - 4 d0) z + d1^2 = 0
  Rat A = p * p - 4 * q, B = 2 * p * d1 - 4 * d0, C = d1 * d1;
  auto try_z = [&](const Rat& z) -> std::optional<FieldElem> {
    if (sgn(z) <= 0) return std::nullopt;
    auto s1 = rat_sqrt(z);
    if (!s1) return std::nullopt;
    Rat s1neg = -*s1;
    for (const Rat& s1v : {*s1, s1neg}) {
      if (is_zero(s1v)) continue;
      Rat s0 = (d1 + p * s1v * s1v) / (2 * s1v);
      FieldElem cand = mk(s0, s1v);
      if (cand * cand == a) return cand;
    }
    return std::nullopt;
  };
  if (is_zero(A)) {
    if (!is_zero(B)) {
      if (auto r = try_z(-C / B)) return r;
    }
    return std::nullopt;
  }
  Rat disc = B * B - 4 * A * C;
  auto sd = rat_sqrt(disc);
  if (!sd) return std::nullopt;
  Rat z1 = (-B + *sd) / (2 * A);
  Rat z2 = (-B - *sd) / (2 * A);
  for (const Rat& z : {z1, z2}) {
    if (auto r = try_z(z)) return r;
  }
  return std::nullopt;
}

}  // namespace birmap
