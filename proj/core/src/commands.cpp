#include "walpha/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <nlohmann/json.hpp>

#include "walpha/bounds.hpp"
#include "walpha/convolution.hpp"
#include "walpha/errors.hpp"
#include "walpha/margins.hpp"
#include "walpha/radii.hpp"
#include "walpha/version.hpp"

namespace walpha {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

DiskGrid grid_from(const Defaults& d) {
  return DiskGrid(d.r_max, d.grid_radial, d.grid_angular);
}

CheckRecord margin_record(const MarginReport& margin, std::string claim,
                          bool affects_verdict) {
  CheckRecord record;
  record.name = margin.quantity;
  record.claim = std::move(claim);
  record.status = margin.min_value < -kRefutationTol ? "refuted" : "supported";
  record.affects_verdict = affects_verdict;
  record.numbers.emplace_back("min_value", margin.min_value);
  record.witness = margin.argmin;
  return record;
}

}  // namespace

FunctionSpec apply_overrides(FunctionSpec spec, const SpecOverrides& overrides) {
  if (spec.family) {
    if (overrides.alpha && spec.family->alpha) {
      spec.family->alpha = *overrides.alpha;
    }
    if (overrides.order && spec.family->order) {
      spec.family->order = *overrides.order;
    }
    if (overrides.seed && spec.family->seed) {
      spec.family->seed = *overrides.seed;
    }
  } else if (overrides.alpha) {
    spec.alpha = *overrides.alpha;
  }
  return spec;
}

double resolve_alpha(const FunctionSpec& spec, std::optional<double> flag) {
  if (flag) return *flag;
  if (auto declared = declared_alpha(spec)) return *declared;
  throw parameter_error(
      "alpha is required: pass --alpha or declare it in the description");
}

CommandOutcome cmd_check(const FunctionSpec& spec, std::optional<double> alpha,
                         const Defaults& defaults) {
  auto start = std::chrono::steady_clock::now();
  AlphaParam a{resolve_alpha(spec, alpha)};
  HarmonicMap f = realize(spec);
  DiskGrid grid = grid_from(defaults);
  EpsilonSample eps{defaults.eps_samples};

  VerificationReport report;
  report.version = kVersion;
  report.spec_echo = serialize_function_spec(spec);
  report.alpha = a.value();
  report.grid = grid.spec();
  report.eps_samples = eps.count();

  report.checks.push_back(margin_record(
      wh0_margin(f, a, grid), "class inequality on the sampled disk", true));
  report.checks.push_back(margin_record(
      epsilon_min_margin(f, a, grid, eps),
      "slice margins over unimodular directions", true));

  {
    CheckRecord record;
    record.name = "sufficient_condition_sum";
    record.claim = "certifying coefficient sum";
    double s = sufficient_condition_sum(f, a);
    record.status = s < 1.0 ? "certified" : "inconclusive";
    record.affects_verdict = false;
    record.numbers.emplace_back("sum", s);
    report.checks.push_back(std::move(record));
  }

  report.checks.push_back(margin_record(sense_preserving_margin(f, grid),
                                        "positive Jacobian", true));
  // Starlikeness follows from membership only when alpha >= 1; below that
  // the margin is informational.
  report.checks.push_back(margin_record(starlike_margin(f, grid),
                                        "starlike image", a.value() >= 1.0));

  bool refuted = false;
  bool certified = false;
  for (const CheckRecord& check : report.checks) {
    if (check.affects_verdict && check.status == "refuted") refuted = true;
    if (check.status == "certified") certified = true;
  }
  report.overall = refuted ? "refuted" : (certified ? "certified" : "supported");
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();
  return CommandOutcome{refuted ? 2 : 0, serialize_report(report)};
}

CommandOutcome cmd_bounds(const FunctionSpec& spec, std::optional<double> alpha,
                          const Defaults& defaults) {
  (void)defaults;
  AlphaParam a{resolve_alpha(spec, alpha)};
  HarmonicMap f = realize(spec);
  BoundReport bounds = verify_coefficient_bounds(f, a);

  ordered_json j;
  j["version"] = kVersion;
  j["spec"] = ordered_json::parse(serialize_function_spec(spec));
  j["alpha"] = a.value();
  j["status"] = bounds.all_satisfied ? "supported" : "refuted";
  ordered_json rows = ordered_json::array();
  for (const BoundRow& row : bounds.rows) {
    rows.push_back({{"n", row.n},
                    {"quantity", row.quantity},
                    {"observed", row.observed},
                    {"bound", row.bound},
                    {"satisfied", row.satisfied}});
  }
  j["rows"] = std::move(rows);
  return CommandOutcome{bounds.all_satisfied ? 0 : 2, j.dump(2) + "\n"};
}

CommandOutcome cmd_growth(const FunctionSpec& spec, std::optional<double> alpha,
                          const Defaults& defaults, bool allow_out_of_hypothesis,
                          const std::optional<std::filesystem::path>& csv_path) {
  AlphaParam a{resolve_alpha(spec, alpha)};
  HarmonicMap f = realize(spec);
  DiskGrid grid = grid_from(defaults);
  GrowthReport growth =
      verify_growth(f, a, grid, defaults.order, allow_out_of_hypothesis);

  ordered_json j;
  j["version"] = kVersion;
  j["spec"] = ordered_json::parse(serialize_function_spec(spec));
  j["alpha"] = a.value();
  j["status"] = !growth.in_hypothesis ? "unproven-regime"
                : growth.all_inside   ? "supported"
                                      : "refuted";
  ordered_json envelope = ordered_json::array();
  for (double r : grid.ring_radii()) {
    GrowthEnvelope env =
        growth_envelope(a.value(), r, defaults.order, allow_out_of_hypothesis);
    envelope.push_back({{"r", env.r},
                        {"lower", env.lower},
                        {"upper", env.upper},
                        {"tail_bound", env.tail_bound}});
  }
  j["envelope"] = std::move(envelope);
  ordered_json violations = ordered_json::array();
  for (const GrowthViolation& v : growth.violations) {
    violations.push_back({{"point", {v.point.real(), v.point.imag()}},
                          {"modulus", v.modulus},
                          {"lower", v.lower},
                          {"upper", v.upper}});
  }
  j["violations"] = std::move(violations);

  if (csv_path) {
    std::string csv = "r,lower,upper,tail_bound\n";
    for (double r : grid.ring_radii()) {
      GrowthEnvelope env =
          growth_envelope(a.value(), r, defaults.order, allow_out_of_hypothesis);
      csv += format_double(env.r) + "," + format_double(env.lower) + "," +
             format_double(env.upper) + "," + format_double(env.tail_bound) +
             "\n";
    }
    std::FILE* out = std::fopen(csv_path->c_str(), "wb");
    if (!out) {
      throw error("cannot open '" + csv_path->string() + "' for writing");
    }
    std::fwrite(csv.data(), 1, csv.size(), out);
    std::fclose(out);
  }

  bool refuted = growth.in_hypothesis && !growth.all_inside;
  return CommandOutcome{refuted ? 2 : 0, j.dump(2) + "\n"};
}

CommandOutcome cmd_convolve(const FunctionSpec& first, const FunctionSpec& second,
                            std::optional<double> alpha, const Defaults& defaults,
                            bool tilde) {
  std::optional<double> declared = alpha;
  if (!declared) declared = declared_alpha(first);
  if (!declared) declared = declared_alpha(second);
  if (!declared) {
    throw parameter_error(
        "alpha is required: pass --alpha or declare it in a description");
  }
  AlphaParam a{*declared};
  HarmonicMap f = realize(first);
  HarmonicMap result = [&] {
    if (tilde) {
      return tilde_convolve(f, realize(second).h());
    }
    return harmonic_convolve(f, realize(second));
  }();
  DiskGrid grid = grid_from(defaults);
  MarginReport margin = wh0_margin(result, a, grid);

  FunctionSpec result_spec;
  result_spec.alpha = a.value();
  result_spec.h = std::vector<Complex>(result.h().coeffs().begin(),
                                       result.h().coeffs().end());
  result_spec.g = std::vector<Complex>(result.g().coeffs().begin(),
                                       result.g().coeffs().end());

  ordered_json j;
  j["version"] = kVersion;
  j["mode"] = tilde ? "tilde" : "harmonic";
  j["alpha"] = a.value();
  j["result"] = ordered_json::parse(serialize_function_spec(result_spec));
  j["margin"] = {{"min_value", margin.min_value},
                 {"witness", {margin.argmin.real(), margin.argmin.imag()}}};
  bool refuted = margin.min_value < -kRefutationTol;
  j["status"] = refuted ? "refuted" : "supported";
  return CommandOutcome{refuted ? 2 : 0, j.dump(2) + "\n"};
}

CommandOutcome cmd_sections(const FunctionSpec& spec, std::optional<double> alpha,
                            int p, int q, const Defaults& defaults) {
  AlphaParam a{resolve_alpha(spec, alpha)};
  HarmonicMap f = realize(spec);
  DiskGrid grid = grid_from(defaults);
  CaseRadius guaranteed = case_radius(p, q);
  RadiusResult empirical = section_radius(f, a, p, q, grid, defaults.tol);

  ordered_json j;
  j["version"] = kVersion;
  j["spec"] = ordered_json::parse(serialize_function_spec(spec));
  j["alpha"] = a.value();
  j["p"] = p;
  j["q"] = q;
  j["case"] = to_string(guaranteed.tag);
  if (guaranteed.radius) {
    j["guaranteed_radius"] = *guaranteed.radius;
  } else {
    j["guaranteed_radius"] = nullptr;
  }
  j["empirical_radius"] = {{"value", empirical.value},
                           {"lo", empirical.lo},
                           {"hi", empirical.hi},
                           {"residual", empirical.residual},
                           {"iterations", empirical.iterations},
                           {"method", empirical.method}};
  bool refuted =
      guaranteed.radius && empirical.value < *guaranteed.radius - 2e-3;
  j["status"] = refuted ? "refuted" : "supported";
  return CommandOutcome{refuted ? 2 : 0, j.dump(2) + "\n"};
}

CommandOutcome cmd_radius(const Defaults& defaults) {
  RadiusResult quintic = quintic_radius(defaults.tol);
  double golden = golden_radius();

  ordered_json j;
  j["version"] = kVersion;
  j["quintic"] = {{"value", quintic.value},
                  {"lo", quintic.lo},
                  {"hi", quintic.hi},
                  {"residual", quintic.residual},
                  {"iterations", quintic.iterations},
                  {"method", quintic.method}};
  j["golden"] = {{"value", golden},
                 {"identity_residual",
                  std::abs(2.0 * golden + golden * golden / (1.0 - golden) - 1.0)}};
  return CommandOutcome{0, j.dump(2) + "\n"};
}

CommandOutcome cmd_emit_boundary(const FunctionSpec& spec, double r, int samples) {
  if (!(r > 0.0) || !(r < 1.0)) {
    throw parameter_error("boundary radius must lie in (0, 1)");
  }
  if (samples < 1) {
    throw parameter_error("boundary needs at least 1 sample");
  }
  HarmonicMap f = realize(spec);
  std::string csv;
  for (int m = 0; m < samples; ++m) {
    double theta = 2.0 * std::numbers::pi * m / samples;
    Complex z{r * std::cos(theta), r * std::sin(theta)};
    Complex w = evaluate_harmonic(f, z);
    csv += format_double(theta) + "," + format_double(w.real()) + "," +
           format_double(w.imag()) + "\n";
  }
  return CommandOutcome{0, std::move(csv)};
}

}  // namespace walpha
