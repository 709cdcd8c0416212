#include "birmap/mapspec.hpp"

#include <nlohmann/json.hpp>

#include "birmap/errors.hpp"

namespace birmap {

using json = nlohmann::json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(ErrorCode::ParseError, "invalid JSON");
  return j;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) raise(ErrorCode::ValidationError, std::string("unknown key '") + it.key() + "' in " + where);
  }
}

FieldPtr field_from_json(const json& j) {
  if (!j.contains("field")) return NumberField::rationals();
  const json& fj = j.at("field");
  reject_unknown(fj, {"modulus"}, "field");
  std::vector<Rat> m;
  for (const auto& c : fj.at("modulus")) m.push_back(rat_from_string(c.get<std::string>()));
  return NumberField::make(std::move(m));
}

Poly3 poly_from_json(const json& arr, const FieldPtr& f, bool homogeneous) {
  std::vector<std::tuple<int, int, int, FieldElem>> terms;
  for (const auto& t : arr) {
    if (!t.is_array() || t.size() != (homogeneous ? 4u : 3u))
      raise(ErrorCode::ValidationError, "polynomial term must be [exponents..., coefficient]");
    if (homogeneous) {
      terms.emplace_back(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                         field_elem_from_string(f, t[3].get<std::string>()));
    } else {
      terms.emplace_back(0, t[0].get<int>(), t[1].get<int>(),
                         field_elem_from_string(f, t[2].get<std::string>()));
    }
  }
  return Poly3::from_terms(f, std::move(terms));
}

json poly_to_json(const Poly3& p, bool homogeneous) {
  json arr = json::array();
  for (const auto& tm : p.terms()) {
    Mono m = Mono::from_key(tm.first);
    json t = json::array();
    if (homogeneous) t.push_back(m.e0);
    t.push_back(m.e1);
    t.push_back(m.e2);
    t.push_back(tm.second.to_string());
    arr.push_back(std::move(t));
  }
  return arr;
}

}  // namespace

FieldElem field_elem_from_string(const FieldPtr& f, const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) raise(ErrorCode::ParseError, "empty field element");
  if (t.front() != '[') return FieldElem::from_rat(f, rat_from_string(t));
  if (t.back() != ']') raise(ErrorCode::ParseError, "unterminated coordinate list " + s);
  std::vector<Rat> coords(static_cast<size_t>(f->degree()), Rat(0));
  size_t idx = 0;
  std::string cur;
  for (size_t i = 1; i < t.size(); ++i) {
    char ch = t[i];
    if (ch == ',' || ch == ']') {
      if (!cur.empty()) {
        if (idx >= coords.size())
          raise(ErrorCode::ValidationError, "too many coordinates for " + f->describe());
        coords[idx++] = rat_from_string(cur);
        cur.clear();
      }
    } else {
      cur += ch;
    }
  }
  return FieldElem(f, std::move(coords));
}

MapSpec parse_map_spec(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) raise(ErrorCode::ValidationError, "map spec must be a JSON object");
  reject_unknown(j, {"field", "family", "params", "components", "inverse", "indeterminacy", "exceptional"},
                 "map spec");
  MapSpec spec;
  spec.field = field_from_json(j);
  if (!j.contains("family")) raise(ErrorCode::ValidationError, "missing 'family'");
  spec.family = j.at("family").get<std::string>();
  const FieldPtr& f = spec.field;

  if (spec.family == "A" || spec.family == "B") {
    if (!j.contains("params")) raise(ErrorCode::ValidationError, "family maps need 'params'");
    const json& p = j.at("params");
    const char* third = spec.family == "A" ? "gamma0" : "beta2";
    reject_unknown(p, {"alpha0", "alpha1", spec.family == "A" ? "gamma0" : "beta2"}, "params");
    auto get = [&](const char* name) {
      if (!p.contains(name)) raise(ErrorCode::ValidationError, std::string("missing param ") + name);
      return field_elem_from_string(f, p.at(name).get<std::string>());
    };
    FieldElem a0 = get("alpha0"), a1 = get("alpha1"), x3 = get(third);
    if (a1.is_zero()) raise(ErrorCode::ValidationError, "alpha1 must be nonzero");
    spec.map = spec.family == "A" ? make_family_A(a0, a1, x3) : make_family_B(a0, a1, x3);
    return spec;
  }
  if (spec.family != "raw") raise(ErrorCode::ValidationError, "family must be A, B or raw");
  if (!j.contains("components")) raise(ErrorCode::ValidationError, "raw maps need 'components'");
  const json& comps = j.at("components");
  if (!comps.is_array() || comps.size() != 3)
    raise(ErrorCode::ValidationError, "components must be three polynomials");
  std::array<Poly3, 3> c;
  for (int i = 0; i < 3; ++i) c[static_cast<size_t>(i)] = poly_from_json(comps[static_cast<size_t>(i)], f, true);
  std::optional<std::array<Poly3, 3>> inv;
  if (j.contains("inverse")) {
    const json& ij = j.at("inverse");
    std::array<Poly3, 3> g;
    for (int i = 0; i < 3; ++i) g[static_cast<size_t>(i)] = poly_from_json(ij[static_cast<size_t>(i)], f, true);
    inv = std::move(g);
  }
  std::optional<std::vector<PPoint>> indet;
  if (j.contains("indeterminacy")) {
    std::vector<PPoint> pts;
    for (const auto& pj : j.at("indeterminacy"))
      pts.emplace_back(field_elem_from_string(f, pj[0].get<std::string>()),
                       field_elem_from_string(f, pj[1].get<std::string>()),
                       field_elem_from_string(f, pj[2].get<std::string>()));
    indet = std::move(pts);
  }
  std::optional<std::vector<Poly3>> exc;
  if (j.contains("exceptional")) {
    std::vector<Poly3> curves;
    for (const auto& cj : j.at("exceptional")) curves.push_back(poly_from_json(cj, f, true));
    exc = std::move(curves);
  }
  spec.map = make_raw(std::move(c), std::move(inv), std::move(indet), std::move(exc));
  return spec;
}

std::string map_spec_to_json(const BiMap& map) {
  json j;
  if (!map.field->is_rational()) {
    json mod = json::array();
    for (const Rat& c : map.field->modulus()) mod.push_back(rat_to_string(c));
    j["field"] = json{{"modulus", mod}};
  }
  if (map.tag == FamilyTag::A || map.tag == FamilyTag::B) {
    j["family"] = map.tag == FamilyTag::A ? "A" : "B";
    j["params"] = json{{"alpha0", map.param(0).to_string()},
                       {"alpha1", map.param(1).to_string()},
                       {map.tag == FamilyTag::A ? "gamma0" : "beta2", map.param(2).to_string()}};
  } else {
    j["family"] = "raw";
    json comps = json::array();
    for (const auto& c : map.comp) comps.push_back(poly_to_json(c, true));
    j["components"] = comps;
    if (map.inverse_comp) {
      json inv = json::array();
      for (const auto& c : *map.inverse_comp) inv.push_back(poly_to_json(c, true));
      j["inverse"] = inv;
    }
  }
  return j.dump(2);
}

FibrationSpec parse_fibration_spec(const std::string& text, const FieldPtr& field) {
  json j = parse_text(text);
  reject_unknown(j, {"P", "Q", "mobius"}, "fibration spec");
  FibrationSpec spec;
  spec.fib = make_fibration(poly_from_json(j.at("P"), field, false),
                            poly_from_json(j.at("Q"), field, false));
  if (j.contains("mobius")) {
    const json& mj = j.at("mobius");
    if (!mj.is_array() || mj.size() != 4) raise(ErrorCode::ValidationError, "mobius must be [w1,w2,w3,w4]");
    Mobius psi{field_elem_from_string(field, mj[0].get<std::string>()),
               field_elem_from_string(field, mj[1].get<std::string>()),
               field_elem_from_string(field, mj[2].get<std::string>()),
               field_elem_from_string(field, mj[3].get<std::string>())};
    if (psi.det().is_zero()) raise(ErrorCode::ValidationError, "degenerate mobius");
    spec.psi = psi;
  }
  return spec;
}

std::string fibration_spec_to_json(const Fibration& fib, const std::optional<Mobius>& psi) {
  json j;
  j["P"] = poly_to_json(fib.P, false);
  j["Q"] = poly_to_json(fib.Q, false);
  if (psi)
    j["mobius"] = json::array({psi->w1.to_string(), psi->w2.to_string(), psi->w3.to_string(),
                               psi->w4.to_string()});
  return j.dump(2);
}

std::string catalog_to_json() {
  json arr = json::array();
  for (const auto& e : zero_entropy_catalog()) {
    json j;
    j["id"] = e.id;
    j["description"] = e.description;
    j["family"] = std::string(1, e.family);
    j["modulus"] = e.modulus;
    j["params"] = e.params;
    j["constraints"] = e.constraints;
    switch (e.expected_growth) {
      case GrowthClass::Kind::Bounded: j["growth"] = "Bounded"; break;
      case GrowthClass::Kind::Linear: j["growth"] = "Linear"; break;
      case GrowthClass::Kind::Quadratic: j["growth"] = "Quadratic"; break;
      case GrowthClass::Kind::Exponential: j["growth"] = "Exponential"; break;
    }
    if (e.expected_seq_period) j["degree_sequence_period"] = *e.expected_seq_period;
    if (e.expected_map_period) j["map_period"] = *e.expected_map_period;
    if (e.k) j["k"] = *e.k;
    if (e.p) j["p"] = *e.p;
    j["fixtures"] = e.fixture_files;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace birmap
