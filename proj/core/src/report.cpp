#include "birmap/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "birmap/errors.hpp"

namespace birmap {

using json = nlohmann::json;

json rat_poly_json(const RatPoly& p) {
  json arr = json::array();
  for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
  return arr;
}

json interval_json(const RatInterval& iv) {
  return json{{"lo", rat_to_string(iv.lo)}, {"hi", rat_to_string(iv.hi)}};
}

json growth_json(const GrowthClass& g) {
  json j;
  j["class"] = g.name();
  if (g.period) j["period"] = *g.period;
  if (g.transient) j["transient"] = g.transient;
  if (g.delta) j["delta"] = interval_json(*g.delta);
  if (!g.delta_factor.is_zero() && g.delta_factor.degree() > 0)
    j["delta_factor"] = rat_poly_json(g.delta_factor);
  if (g.discrepancy) j["discrepancy"] = *g.discrepancy;
  return j;
}

json orbit_json(const OrbitRecord& rec) {
  json pts = json::array();
  int step = 0;
  for (const auto& jp : rec.points) {
    json p;
    p["step"] = step++;
    p["depth"] = jp.depth;
    json center = json::array();
    for (const auto& c : jp.center.coords()) center.push_back(c.to_string());
    p["center"] = center;
    if (jp.dir1) p["direction"] = json::array({jp.dir1->u.to_string(), jp.dir1->v.to_string()});
    if (jp.dir2) p["direction2"] = json::array({jp.dir2->u.to_string(), jp.dir2->v.to_string()});
    if (!jp.label.empty()) p["label"] = jp.label;
    pts.push_back(std::move(p));
  }
  json j;
  j["start"] = rec.start;
  j["points"] = pts;
  switch (rec.terminal.kind) {
    case OrbitTerminal::Kind::Reached:
      j["terminal"] = json{{"kind", "reached"}, {"indeterminacy_index", rec.terminal.reached_index}};
      break;
    case OrbitTerminal::Kind::Truncated:
      j["terminal"] = json{{"kind", "truncated"}, {"note", rec.terminal.note}};
      break;
    case OrbitTerminal::Kind::Collapsed:
      j["terminal"] = json{{"kind", "collapsed"}, {"note", rec.terminal.note}};
      break;
  }
  return j;
}

json dyndeg_json(const DynamicalDegreeReport& rep) {
  json j;
  j["charpoly"] = rat_poly_json(rep.char_poly);
  if (rep.delta) j["delta"] = interval_json(*rep.delta);
  else j["delta"] = "1";
  j["growth"] = growth_json(rep.growth);
  j["empirical_annihilator"] = rat_poly_json(rep.empirical_annihilator);
  j["degrees"] = rep.degrees;
  return j;
}

json case_label_json(const CaseLabel& label) {
  json j;
  j["family"] = label.family == FamilyTag::A ? "A" : label.family == FamilyTag::B ? "B" : "raw";
  if (label.k) j["k"] = *label.k;
  if (label.p) j["p"] = *label.p;
  j["growth"] = growth_json(label.growth);
  if (!label.case_id.empty()) j["case"] = label.case_id;
  return j;
}

namespace {

void render_text(const json& j, std::ostringstream& os, int indent) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object() || it->is_array()) {
        os << pad << it.key() << ":\n";
        render_text(*it, os, indent + 1);
      } else {
        os << pad << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& e : j)
      if (e.is_object() || e.is_array()) scalars = false;
    if (scalars) {
      os << pad;
      for (size_t i = 0; i < j.size(); ++i)
        os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      os << "\n";
    } else {
      for (const auto& e : j) {
        os << pad << "-\n";
        render_text(e, os, indent + 1);
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void render_csv_row(const json& j, std::ostringstream& os) {
  if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      os << (i ? "," : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
    os << "\n";
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      os << it.key() << ",";
      if (it->is_array()) {
        for (size_t i = 0; i < it->size(); ++i)
          os << (i ? "," : "") << ((*it)[i].is_string() ? (*it)[i].get<std::string>() : (*it)[i].dump());
        os << "\n";
      } else {
        os << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  } else {
    os << j.dump() << "\n";
  }
}

}  // namespace

std::string render_report(const json& body, const std::string& format) {
  if (format == "json") return body.dump(2) + "\n";
  std::ostringstream os;
  if (format == "text") {
    render_text(body, os, 0);
    return os.str();
  }
  if (format == "csv") {
    if (body.is_object() && body.contains("degrees")) {
      render_csv_row(body.at("degrees"), os);
      return os.str();
    }
    render_csv_row(body, os);
    return os.str();
  }
  raise(ErrorCode::InvalidParameter, "format must be json, text or csv");
}

}  // namespace birmap
