#include "birmap/classifier.hpp"

#include "birmap/errors.hpp"

namespace birmap {

bool condition_k(const FieldElem& a1, const FieldElem& g0, int k) {
  if (k < 1) raise(ErrorCode::InvalidParameter, "condition k needs k >= 1");
  const FieldPtr& f = a1.field();
  FieldElem sum = FieldElem::zero(f);
  FieldElem pw = FieldElem::one(f);
  for (int i = 0; i < k; ++i) {
    sum += pw;
    pw = pw * a1;
  }
  return (a1 * a1 * g0 * sum + FieldElem::one(f)).is_zero();
}

std::optional<int> find_p_A(const BiMap& f, int p_max) {
  if (f.tag != FamilyTag::A) raise(ErrorCode::InvalidParameter, "find_p_A needs a family A map");
  SEProfile prof = se_profile(f, p_max + 1);
  if (prof.orbit[2].se && prof.orbit[2].tau == 0) {
    int p = prof.orbit[2].length - 1;
    if (p <= p_max) return p;
  }
  return std::nullopt;
}

std::optional<int> find_p_B(const FieldElem& a0, const FieldElem& b2, const FieldElem& a1, int p_max) {
  if (p_max < 0) raise(ErrorCode::InvalidParameter, "p_max >= 0 required");
  FieldElem x = a0, y = b2;
  for (int n = 0; n <= p_max; ++n) {
    if (x.is_zero() && y.is_zero()) return n;
    if (y.is_zero()) return std::nullopt;
    FieldElem nx = a0 + a1 * x;
    FieldElem ny = (x + b2 * y) / y;
    x = nx;
    y = ny;
  }
  return std::nullopt;
}

namespace {

FieldElem gp(const FieldPtr& f, std::vector<long> c) {
  FieldElem out = FieldElem::zero(f);
  FieldElem pw = FieldElem::one(f);
  FieldElem a = f->degree() > 1 ? FieldElem::gen(f) : FieldElem::one(f);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out += pw.scaled(rat(c[i]));
    if (i + 1 < c.size()) pw = pw * a;
  }
  return out;
}

}  // namespace

CaseLabel classify_map(const BiMap& f, int k_max, int p_max) {
  CaseLabel lab;
  lab.family = f.tag;
  if (f.tag == FamilyTag::Raw)
    raise(ErrorCode::InvalidParameter, "classification needs a family-tagged map");
  const FieldPtr& fld = f.field;
  const FieldElem one = FieldElem::one(fld);

  if (f.tag == FamilyTag::B) {
    lab.p = find_p_B(f.param(0), f.param(2), f.param(1), p_max);
    lab.report = dynamical_degree(f);
    lab.growth = lab.report.growth;
    if (lab.growth.kind != GrowthClass::Kind::Exponential) {
      if (!lab.p) lab.case_id = "b-generic";
      else if (*lab.p == 0) lab.case_id = "b-origin";
      else lab.case_id = "b-periodic";
    }
    return lab;
  }

  const FieldElem &a0 = f.param(0), &a1 = f.param(1), &g0 = f.param(2);
  for (int k = 1; k <= k_max; ++k)
    if (condition_k(a1, g0, k)) {
      lab.k = k;
      break;
    }
  if (a1 == -one && g0 == -one) lab.p = 4;  // collision locus, any a0
  else lab.p = find_p_A(f, p_max);

  lab.report = dynamical_degree(f);
  lab.growth = lab.report.growth;
  if (lab.growth.kind == GrowthClass::Kind::Exponential) return lab;

  // exact constraint matching for the zero-entropy propositions
  auto inv = [&](const FieldElem& e) { return e.inv(); };
  if (lab.p && !lab.k) {
    if (*lab.p == 0 && a0 == inv(a1) && g0 == inv(a1)) lab.case_id = "p0";
    else if (*lab.p == 1) {
      FieldElem gexp = inv(one + a1);
      FieldElem aexp = (one + a1 + a1 * a1) * inv(a1 * (one + a1) * (one + a1));
      if (g0 == gexp && a0 == aexp) lab.case_id = "p1";
    } else if (*lab.p == 2) {
      lab.case_id = "p2";
    }
  } else if (lab.p && lab.k) {
    if (*lab.p <= 2) {
      lab.case_id = "p" + std::to_string(*lab.p);  // (k,0),(k,1),(k,2) periodic subcases
    } else if (*lab.p == 3 && *lab.k == 1) {
      FieldElem c6 = a1.pow(6) + a1.pow(3) + one;
      FieldElem aexp = -(a1.pow(5).scaled(rat(2))) + a1.pow(3) - a1 * a1 - a1;
      if (c6.is_zero() && a0 == aexp) lab.case_id = "k1p3";
    } else if (*lab.p == 3 && *lab.k == 2) {
      FieldElem c5 = a1.pow(4) + a1.pow(3) + a1 * a1 + a1 + one;
      FieldElem aexp = -(a1.pow(3) + (a1 * a1).scaled(rat(2)) + a1 + one + one);
      if (c5.is_zero() && a0 == aexp) lab.case_id = "k2p3-a";
      else if (a1 == one && a0 == FieldElem::from_rat(fld, rat(1, 4))) lab.case_id = "k2p3-b";
    } else if (*lab.p == 4 && *lab.k == 1) {
      if (a1 == -one && g0 == -one) lab.case_id = "k1p4-a";
      else if (a1 == one && a0.is_zero()) lab.case_id = "k1p4-b";
      else if ((a1 * a1 + one).is_zero() && a0.is_zero()) lab.case_id = "k1p4-c";
      else if ((a1.pow(4) + one).is_zero() && a0 == one - a1.pow(3)) lab.case_id = "k1p4-d";
    }
  }
  return lab;
}

BiMap CatalogEntry::make() const {
  FieldPtr f = make_field();
  std::vector<FieldElem> ps;
  for (const auto& s : params) {
    if (!s.empty() && s.front() == '[') {
      // "[c0, c1, ...]" coordinates
      std::vector<Rat> coords(static_cast<size_t>(f->degree()), Rat(0));
      size_t idx = 0;
      std::string cur;
      for (char ch : s.substr(1)) {
        if (ch == ',' || ch == ']') {
          if (!cur.empty()) coords[idx++] = rat_from_string(cur);
          cur.clear();
          if (ch == ']') break;
        } else
          cur += ch;
      }
      ps.emplace_back(f, std::move(coords));
    } else {
      ps.push_back(FieldElem::from_rat(f, rat_from_string(s)));
    }
  }
  if (family == 'A') return make_family_A(ps[0], ps[1], ps[2]);
  return make_family_B(ps[0], ps[1], ps[2]);
}

FieldPtr CatalogEntry::make_field() const {
  if (modulus.empty()) return NumberField::rationals();
  std::vector<Rat> m;
  for (const auto& s : modulus) m.push_back(rat_from_string(s));
  return NumberField::make(std::move(m));
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : zero_entropy_catalog())
    if (e.id == id) return e;
  raise(ErrorCode::InvalidParameter, "no catalog entry " + id);
}

}  // namespace birmap
