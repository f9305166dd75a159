#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walpha/defaults.hpp"
#include "walpha/extremals.hpp"
#include "walpha/grid.hpp"

namespace walpha {

// Parsed function description file. Exactly one representation is present:
// a named family, or explicit coefficient lists for h and g together with
// the alpha the function claims membership for.
struct FunctionSpec {
  std::optional<FamilySpec> family;
  std::optional<double> alpha;
  std::optional<std::vector<Complex>> h;
  std::optional<std::vector<Complex>> g;
};

// Strict JSON parse; unknown keys and malformed entries raise
// spec_parse_error naming the offending field.
FunctionSpec parse_function_spec(const std::string& text);

// Canonical serialization. parse -> serialize -> parse is the identity and
// serialized coefficients round-trip exactly.
std::string serialize_function_spec(const FunctionSpec& spec);

// Builds the described map, validating all invariants.
HarmonicMap realize(const FunctionSpec& spec);

// The alpha carried by the description, when it has one.
std::optional<double> declared_alpha(const FunctionSpec& spec);

// One verification check inside a report.
struct CheckRecord {
  std::string name;
  std::string claim;
  // refuted | certified | supported | inconclusive | unproven-regime
  std::string status;
  bool affects_verdict = true;
  std::vector<std::pair<std::string, double>> numbers;
  std::optional<Complex> witness;
};

struct VerificationReport {
  std::string version;
  std::string spec_echo;  // canonical serialization of the input
  double alpha = 0.0;
  GridSpec grid;
  int eps_samples = 0;
  std::string overall;  // refuted | certified | supported
  std::vector<CheckRecord> checks;
  double wall_time_ms = 0.0;
};

// Stable key ordering throughout; with include_timing off the timing field
// is pinned to zero so identical runs serialize to identical bytes.
std::string serialize_report(const VerificationReport& report,
                             bool include_timing = true);

}  // namespace walpha
