#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "birmap/mapspec.hpp"
#include "birmap/report.hpp"
#include "birmap/verify.hpp"

using namespace birmap;
using json = nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Common {
  std::string format = "json";
  uint64_t seed = 1;
  int max_steps = 64;
  size_t term_cap = 200000;
};

void emit(const json& body, const Common& c) { std::cout << render_report(body, c.format); }

MapSpec load_map(const std::string& path) { return parse_map_spec(slurp(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree growth, orbit structure and invariant fibrations of plane birational maps"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--format", c.format, "output format: json, text or csv")->capture_default_str();
  app.add_option("--seed", c.seed, "seed for the deterministic samplers")->capture_default_str();
  app.add_option("--max-steps", c.max_steps, "orbit step cap")->capture_default_str();
  app.add_option("--term-cap", c.term_cap, "sparse-term cap for compositions")->capture_default_str();

  std::string map_path, fib_path;
  int n = 10, degree = 3, n_max = 64;

  auto* degrees_cmd = app.add_subcommand("degrees", "degree sequence d_1..d_n of the iterates");
  degrees_cmd->add_option("--map", map_path, "map spec JSON")->required();
  degrees_cmd->add_option("--n", n, "number of iterates")->capture_default_str();

  auto* charpoly_cmd = app.add_subcommand("charpoly", "orbit-list characteristic polynomial");
  charpoly_cmd->add_option("--map", map_path)->required();

  auto* dyndeg_cmd = app.add_subcommand("dyndeg", "characteristic polynomial, dynamical degree, growth class");
  dyndeg_cmd->add_option("--map", map_path)->required();

  auto* classify_cmd = app.add_subcommand("classify", "zero-entropy case detection");
  classify_cmd->add_option("--map", map_path)->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of an inverse-indeterminacy point");
  int start = 2;
  orbit_cmd->add_option("--map", map_path)->required();
  orbit_cmd->add_option("--start", start, "which A_i to track (0, 1 or 2)")->capture_default_str();

  auto* fib_cmd = app.add_subcommand("check-fibration", "verify V∘f = psi(V) exactly");
  fib_cmd->add_option("--map", map_path)->required();
  fib_cmd->add_option("--fibration", fib_path, "fibration spec JSON")->required();

  auto* search_cmd = app.add_subcommand("search-curves", "invariant curves of one degree");
  search_cmd->add_option("--map", map_path)->required();
  search_cmd->add_option("--degree", degree, "curve degree D")->capture_default_str();

  auto* period_cmd = app.add_subcommand("period", "minimal n with F^n projectively the identity");
  period_cmd->add_option("--map", map_path)->required();
  period_cmd->add_option("--n-max", n_max, "search bound")->capture_default_str();

  auto* catalog_cmd = app.add_subcommand("catalog", "print or verify the zero-entropy catalog");
  bool catalog_verify = false;
  catalog_cmd->add_flag("--check", catalog_verify, "re-verify every entry's claims");

  auto* verify_cmd = app.add_subcommand("verify-all", "run the full acceptance suite");
  bool skip_props = false;
  verify_cmd->add_flag("--skip-property-suites", skip_props, "omit the randomized law suites");

  CLI11_PARSE(app, argc, argv);
  auto t0 = std::chrono::steady_clock::now();
  int exit_code = 0;
  try {
    if (*degrees_cmd) {
      auto spec = load_map(map_path);
      auto d = degree_sequence(spec.map, n, c.term_cap);
      json body;
      body["command"] = "degrees";
      body["degrees"] = d;
      emit(body, c);
    } else if (*charpoly_cmd) {
      auto spec = load_map(map_path);
      auto prof = se_profile(spec.map, c.max_steps);
      json body;
      body["command"] = "charpoly";
      body["charpoly"] = rat_poly_json(char_poly_bk(build_lists(prof)));
      if (prof.k) body["k"] = *prof.k;
      if (prof.p) body["p"] = *prof.p;
      emit(body, c);
    } else if (*dyndeg_cmd) {
      auto spec = load_map(map_path);
      DynDegOptions opt;
      opt.max_orbit_steps = c.max_steps;
      opt.term_cap = c.term_cap;
      json body = dyndeg_json(dynamical_degree(spec.map, opt));
      body["command"] = "dyndeg";
      emit(body, c);
    } else if (*classify_cmd) {
      auto spec = load_map(map_path);
      json body = case_label_json(classify_map(spec.map));
      body["command"] = "classify";
      emit(body, c);
    } else if (*orbit_cmd) {
      auto spec = load_map(map_path);
      json body = orbit_json(track_orbit(spec.map, start, c.max_steps));
      body["command"] = "orbit";
      emit(body, c);
    } else if (*fib_cmd) {
      auto spec = load_map(map_path);
      auto fs = parse_fibration_spec(slurp(fib_path), spec.field);
      json body;
      body["command"] = "check-fibration";
      if (fs.psi) {
        body["verdict"] = check_fibration(spec.map, fs.fib, *fs.psi);
      } else {
        auto psi = find_mobius(spec.map, fs.fib);
        body["verdict"] = psi.has_value();
        if (psi)
          body["mobius"] = json::array({psi->w1.to_string(), psi->w2.to_string(),
                                        psi->w3.to_string(), psi->w4.to_string()});
      }
      emit(body, c);
      if (!body["verdict"].get<bool>()) exit_code = 1;
    } else if (*search_cmd) {
      auto spec = load_map(map_path);
      auto res = search_invariant_curves(spec.map, degree);
      json body;
      body["command"] = "search-curves";
      json curves = json::array();
      for (const auto& ec : res.curves) {
        json cj;
        json terms = json::array();
        for (const auto& tm : ec.curve.terms()) {
          Mono m = Mono::from_key(tm.first);
          terms.push_back(json::array({m.e0, m.e1, m.e2, tm.second.to_string()}));
        }
        cj["curve"] = terms;
        cj["eigenvalue"] = ec.eigenvalue.to_string();
        curves.push_back(std::move(cj));
      }
      body["curves"] = curves;
      body["needs_extension"] = res.needs_extension;
      emit(body, c);
    } else if (*period_cmd) {
      auto spec = load_map(map_path);
      auto per = check_periodicity(spec.map, n_max, c.term_cap);
      json body;
      body["command"] = "period";
      if (per) body["period"] = *per;
      else body["period"] = nullptr;
      emit(body, c);
    } else if (*catalog_cmd) {
      if (!catalog_verify) {
        std::cout << catalog_to_json() << "\n";
      } else {
        json results = json::array();
        bool all = true;
        for (const auto& e : zero_entropy_catalog()) {
          json r;
          r["id"] = e.id;
          CaseLabel lab = classify_map(e.make());
          bool ok = lab.growth.kind == e.expected_growth;
          if (e.expected_map_period) {
            auto per = check_periodicity(e.make(), *e.expected_map_period + 4);
            ok &= per && *per == *e.expected_map_period;
            r["map_period"] = per ? json(*per) : json(nullptr);
          }
          r["growth"] = lab.growth.name();
          r["pass"] = ok;
          all &= ok;
          results.push_back(std::move(r));
          std::cerr << "checked " << e.id << "\n";
        }
        json body;
        body["command"] = "catalog";
        body["entries"] = results;
        emit(body, c);
        if (!all) exit_code = 1;
      }
    } else if (*verify_cmd) {
      VerifyOptions vo;
      vo.seed = c.seed;
      vo.include_property_suites = !skip_props;
      vo.on_result = [](const VerifyResult& r) {
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n";
      };
      auto results = run_acceptance(vo);
      json body;
      body["command"] = "verify-all";
      json arr = json::array();
      bool all = true;
      for (const auto& r : results) {
        arr.push_back(json{{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
        all &= r.pass;
      }
      body["results"] = arr;
      body["pass"] = all;
      emit(body, c);
      if (!all) exit_code = 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError ||
                   e.code() == ErrorCode::InvalidParameter
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  std::cerr << "elapsed " << ms.count() << " ms\n";
  return exit_code;
}
