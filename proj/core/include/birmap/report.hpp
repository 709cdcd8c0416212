#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "birmap/classifier.hpp"

namespace birmap {

// JSON building blocks for the CLI reports; all numeric content is exact
// (rationals as strings), so identical invocations are byte-identical.
nlohmann::json rat_poly_json(const RatPoly& p);
nlohmann::json interval_json(const RatInterval& iv);
nlohmann::json growth_json(const GrowthClass& g);
nlohmann::json orbit_json(const OrbitRecord& rec);
nlohmann::json dyndeg_json(const DynamicalDegreeReport& rep);
nlohmann::json case_label_json(const CaseLabel& label);

std::string render_report(const nlohmann::json& body, const std::string& format);

}  // namespace birmap
