#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "walpha/defaults.hpp"
#include "walpha/report.hpp"

namespace walpha {

// Exit code contract shared by every command: 0 when nothing was refuted,
// 2 on a mathematical refutation, 1 on usage or I/O problems (raised as
// exceptions and translated by the caller).
struct CommandOutcome {
  int exit_code = 0;
  std::string output;
};

// Flag overrides applied on top of a parsed function description.
struct SpecOverrides {
  std::optional<double> alpha;
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
};

// Returns the description with flag values substituted into the fields the
// family actually carries.
FunctionSpec apply_overrides(FunctionSpec spec, const SpecOverrides& overrides);

// Resolves the alpha to verify against: explicit flag first, then the
// description's own alpha. Throws parameter_error when neither exists.
double resolve_alpha(const FunctionSpec& spec, std::optional<double> flag);

// Membership verdict: class margin, slice margins, certifying sum,
// Jacobian and starlikeness margins.
CommandOutcome cmd_check(const FunctionSpec& spec, std::optional<double> alpha,
                         const Defaults& defaults);

// Coefficient inequalities for every available degree.
CommandOutcome cmd_bounds(const FunctionSpec& spec, std::optional<double> alpha,
                          const Defaults& defaults);

// Radial modulus envelope check; optionally emits the curve as CSV.
CommandOutcome cmd_growth(const FunctionSpec& spec, std::optional<double> alpha,
                          const Defaults& defaults, bool allow_out_of_hypothesis,
                          const std::optional<std::filesystem::path>& csv_path);

// Coefficientwise product of two members (or the analytic variant against
// the h part of the second description) followed by a margin check.
CommandOutcome cmd_convolve(const FunctionSpec& first, const FunctionSpec& second,
                            std::optional<double> alpha, const Defaults& defaults,
                            bool tilde);

// Section classification, guaranteed radius and empirical radius.
CommandOutcome cmd_sections(const FunctionSpec& spec, std::optional<double> alpha,
                            int p, int q, const Defaults& defaults);

// The two closed-form radii and the quintic root.
CommandOutcome cmd_radius(const Defaults& defaults);

// CSV rows "theta,re,im" of the image of the circle |z| = r, sampled at
// `samples` uniform angles. Requires 0 < r < 1.
CommandOutcome cmd_emit_boundary(const FunctionSpec& spec, double r, int samples);

}  // namespace walpha
