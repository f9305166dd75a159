#include "walpha/report.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "walpha/errors.hpp"
#include "walpha/version.hpp"

namespace walpha {

namespace {

using ordered_json = nlohmann::ordered_json;

double as_finite_double(const ordered_json& j, const std::string& field) {
  if (!j.is_number()) {
    throw spec_parse_error("field '" + field + "' must be a number");
  }
  double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw spec_parse_error("field '" + field + "' must be finite");
  }
  return v;
}

int as_int(const ordered_json& j, const std::string& field) {
  if (!j.is_number_integer()) {
    throw spec_parse_error("field '" + field + "' must be an integer");
  }
  return j.get<int>();
}

std::vector<Complex> as_coefficients(const ordered_json& j,
                                     const std::string& field) {
  if (!j.is_array()) {
    throw spec_parse_error("field '" + field +
                           "' must be an array of [re, im] pairs");
  }
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const ordered_json& entry = j[i];
    if (!entry.is_array() || entry.size() != 2) {
      throw spec_parse_error("entry " + std::to_string(i) + " of '" + field +
                             "' must be a [re, im] pair");
    }
    std::string label = field + "[" + std::to_string(i) + "]";
    out.emplace_back(as_finite_double(entry[0], label),
                     as_finite_double(entry[1], label));
  }
  return out;
}

FamilySpec parse_family(const ordered_json& j) {
  if (!j.is_object()) {
    throw spec_parse_error("field 'family' must be an object");
  }
  FamilySpec spec;
  bool saw_name = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "name") {
      if (!value.is_string()) {
        throw spec_parse_error("field 'name' must be a string");
      }
      auto family = family_from_string(value.get<std::string>());
      if (!family) {
        throw spec_parse_error("unknown family '" + value.get<std::string>() +
                               "'");
      }
      spec.name = *family;
      saw_name = true;
    } else if (key == "alpha") {
      spec.alpha = as_finite_double(value, "alpha");
    } else if (key == "n") {
      spec.n = as_int(value, "n");
    } else if (key == "order") {
      spec.order = as_int(value, "order");
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer()) {
        throw spec_parse_error("field 'seed' must be a nonnegative integer");
      }
      if (value.is_number_integer() && value.get<std::int64_t>() < 0) {
        throw spec_parse_error("field 'seed' must be a nonnegative integer");
      }
      spec.seed = value.get<std::uint64_t>();
    } else if (key == "slack") {
      spec.slack = as_finite_double(value, "slack");
    } else {
      throw spec_parse_error("unknown family field '" + key + "'");
    }
  }
  if (!saw_name) {
    throw spec_parse_error("family requires a 'name' field");
  }
  return spec;
}

}  // namespace

FunctionSpec parse_function_spec(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw spec_parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw spec_parse_error("function description must be a JSON object");
  }

  FunctionSpec spec;
  if (j.contains("family")) {
    if (j.size() != 1) {
      throw spec_parse_error(
          "a family description admits no fields besides 'family'");
    }
    spec.family = parse_family(j["family"]);
    return spec;
  }

  for (const auto& [key, value] : j.items()) {
    if (key == "alpha") {
      spec.alpha = as_finite_double(value, "alpha");
    } else if (key == "h") {
      spec.h = as_coefficients(value, "h");
    } else if (key == "g") {
      spec.g = as_coefficients(value, "g");
    } else {
      throw spec_parse_error("unknown field '" + key + "'");
    }
  }
  if (!spec.alpha || !spec.h || !spec.g) {
    throw spec_parse_error(
        "explicit descriptions require 'alpha', 'h' and 'g'");
  }
  return spec;
}

namespace {

ordered_json spec_to_json(const FunctionSpec& spec) {
  ordered_json j;
  if (spec.family) {
    ordered_json family;
    family["name"] = to_string(spec.family->name);
    if (spec.family->alpha) family["alpha"] = *spec.family->alpha;
    if (spec.family->n) family["n"] = *spec.family->n;
    if (spec.family->order) family["order"] = *spec.family->order;
    if (spec.family->seed) family["seed"] = *spec.family->seed;
    if (spec.family->slack) family["slack"] = *spec.family->slack;
    j["family"] = std::move(family);
    return j;
  }
  j["alpha"] = spec.alpha.value_or(0.0);
  auto dump_part = [](const std::vector<Complex>& part) {
    ordered_json rows = ordered_json::array();
    for (Complex c : part) {
      rows.push_back({c.real(), c.imag()});
    }
    return rows;
  };
  j["h"] = dump_part(spec.h.value_or(std::vector<Complex>{}));
  j["g"] = dump_part(spec.g.value_or(std::vector<Complex>{}));
  return j;
}

}  // namespace

std::string serialize_function_spec(const FunctionSpec& spec) {
  return spec_to_json(spec).dump(2) + "\n";
}

HarmonicMap realize(const FunctionSpec& spec) {
  if (spec.family) {
    return build_family(*spec.family);
  }
  if (!spec.h || spec.h->size() < 2) {
    throw construction_error("explicit 'h' needs at least degrees 0 and 1");
  }
  AnalyticSeries h{*spec.h};
  AnalyticSeries g = (!spec.g || spec.g->empty()) ? AnalyticSeries::zero()
                                                  : AnalyticSeries{*spec.g};
  return HarmonicMap(std::move(h), std::move(g));
}

std::optional<double> declared_alpha(const FunctionSpec& spec) {
  if (spec.family) return spec.family->alpha;
  return spec.alpha;
}

std::string serialize_report(const VerificationReport& report,
                             bool include_timing) {
  ordered_json j;
  j["version"] = report.version;
  j["spec"] = ordered_json::parse(report.spec_echo);
  j["alpha"] = report.alpha;
  j["grid"] = {{"r_max", report.grid.r_max},
               {"radial_count", report.grid.radial_count},
               {"angular_count", report.grid.angular_count}};
  j["eps_samples"] = report.eps_samples;
  j["overall"] = report.overall;
  ordered_json checks = ordered_json::array();
  for (const CheckRecord& check : report.checks) {
    ordered_json c;
    c["name"] = check.name;
    c["claim"] = check.claim;
    c["status"] = check.status;
    c["affects_verdict"] = check.affects_verdict;
    ordered_json numbers;
    for (const auto& [key, value] : check.numbers) {
      numbers[key] = value;
    }
    c["numbers"] = std::move(numbers);
    if (check.witness) {
      c["witness"] = {check.witness->real(), check.witness->imag()};
    }
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["wall_time_ms"] = include_timing ? report.wall_time_ms : 0.0;
  return j.dump(2) + "\n";
}

}  // namespace walpha
