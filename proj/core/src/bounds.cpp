#include "walpha/bounds.hpp"

#include <cmath>

#include "walpha/defaults.hpp"
#include "walpha/errors.hpp"

namespace walpha {

namespace {

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw parameter_error("alpha must be finite and nonnegative");
  }
}

constexpr double kBoundSlack = 1e-12;

}  // namespace

std::pair<double, double> coefficient_bound(double alpha, int n) {
  require_alpha(alpha);
  if (n < 2) {
    throw parameter_error("coefficient bounds start at n = 2");
  }
  double m = test_multiplier(alpha, n);
  return {1.0 / m, 2.0 / m};
}

BoundReport verify_coefficient_bounds(const HarmonicMap& f, AlphaParam alpha) {
  BoundReport report;
  int order = std::max(f.h().order(), f.g().order());
  for (int n = 2; n <= order; ++n) {
    auto [single, combined] = coefficient_bound(alpha.value(), n);
    double an = std::abs(f.h().coeff(n));
    double bn = std::abs(f.g().coeff(n));
    auto add = [&](const char* quantity, double observed, double bound) {
      bool ok = observed <= bound + kBoundSlack;
      report.rows.push_back(BoundRow{n, quantity, observed, bound, ok});
      report.all_satisfied = report.all_satisfied && ok;
    };
    add("b_abs", bn, single);
    add("sum_abs", an + bn, combined);
    add("diff_abs", std::abs(an - bn), combined);
    add("a_abs", an, combined);
  }
  return report;
}

GrowthEnvelope growth_envelope(double alpha, double r, int terms,
                               bool allow_out_of_hypothesis) {
  require_alpha(alpha);
  if (!(r >= 0.0) || !(r < 1.0)) {
    throw parameter_error("growth envelope radius must lie in [0, 1)");
  }
  if (terms < 2) {
    throw parameter_error("growth envelope needs at least 2 terms");
  }
  bool in_hypothesis = alpha > 0.0 && alpha <= 1.0;
  if (!in_hypothesis && !allow_out_of_hypothesis) {
    throw hypothesis_error("growth envelope is proven only for alpha in (0, 1]");
  }

  double lower = r;
  double upper = r;
  double rn = r;
  double sign = -1.0;
  for (int n = 2; n <= terms; ++n) {
    rn *= r;
    double term = 2.0 * rn / test_multiplier(alpha, n);
    upper += term;
    lower += sign * term;
    sign = -sign;
  }
  double tail = 2.0 * rn * r / ((1.0 - r) * test_multiplier(alpha, terms + 1));
  return GrowthEnvelope{r, lower - tail, upper + tail, tail, in_hypothesis};
}

GrowthReport verify_growth(const HarmonicMap& f, AlphaParam alpha,
                           const DiskGrid& grid, int terms,
                           bool allow_out_of_hypothesis) {
  GrowthReport report;

  // One envelope per ring; every point of a ring shares its modulus.
  std::vector<GrowthEnvelope> envelopes;
  envelopes.reserve(grid.ring_radii().size());
  for (double r : grid.ring_radii()) {
    envelopes.push_back(
        growth_envelope(alpha.value(), r, terms, allow_out_of_hypothesis));
  }
  report.in_hypothesis = envelopes.empty() || envelopes.front().in_hypothesis;

  auto points = grid.points();
  for (std::size_t i = 1; i < points.size(); ++i) {
    const GrowthEnvelope& env = envelopes[static_cast<std::size_t>(
        grid.ring_of(i) - 1)];
    double modulus = std::abs(evaluate_harmonic(f, points[i]));
    if (modulus < env.lower - kRefutationTol ||
        modulus > env.upper + kRefutationTol) {
      report.all_inside = false;
      report.violations.push_back(
          GrowthViolation{points[i], modulus, env.lower, env.upper});
    }
  }
  return report;
}

ConvexNullReport convex_null_check(double alpha, int count) {
  require_alpha(alpha);
  if (count < 3) {
    throw parameter_error("convex null check needs count >= 3");
  }
  std::vector<double> c(static_cast<std::size_t>(count) + 1);
  c[0] = 1.0;
  for (int n = 2; n <= count + 1; ++n) {
    c[static_cast<std::size_t>(n - 1)] = 2.0 / test_multiplier(alpha, n);
  }
  ConvexNullReport report;
  for (int k = 1; k < count; ++k) {
    double d1 = c[static_cast<std::size_t>(k - 1)] - c[static_cast<std::size_t>(k)];
    double d2 = c[static_cast<std::size_t>(k)] - c[static_cast<std::size_t>(k + 1)];
    if (d1 < d2 || d2 < 0.0) {
      report.pass = false;
      report.violation_index = k;
      report.c_prev = c[static_cast<std::size_t>(k - 1)];
      report.c_mid = c[static_cast<std::size_t>(k)];
      report.c_next = c[static_cast<std::size_t>(k + 1)];
      return report;
    }
  }
  return report;
}

}  // namespace walpha
