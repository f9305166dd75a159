#include "walpha/extremals.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "walpha/errors.hpp"
#include "walpha/rng.hpp"

namespace walpha {

namespace {

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw parameter_error("alpha must be finite and nonnegative");
  }
}

}  // namespace

HarmonicMap harmonic_koebe(int order) {
  if (order < 3) {
    throw parameter_error("harmonic Koebe truncation needs order >= 3");
  }
  std::vector<Complex> a(static_cast<std::size_t>(order) + 1);
  std::vector<Complex> b(static_cast<std::size_t>(order) + 1);
  a[1] = 1.0;
  for (int n = 2; n <= order; ++n) {
    a[static_cast<std::size_t>(n)] = (2.0 * n + 1.0) * (n + 1.0) / 6.0;
    b[static_cast<std::size_t>(n)] = (2.0 * n - 1.0) * (n - 1.0) / 6.0;
  }
  return HarmonicMap(AnalyticSeries(std::move(a)), AnalyticSeries(std::move(b)));
}

AnalyticSeries analytic_koebe(int order) {
  if (order < 1) {
    throw parameter_error("analytic Koebe truncation needs order >= 1");
  }
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = static_cast<double>(n);
  }
  return AnalyticSeries(std::move(c));
}

HarmonicMap sharp_sum(double alpha, int order) {
  require_alpha(alpha);
  if (order < 2) {
    throw parameter_error("sharp sum family needs order >= 2");
  }
  std::vector<Complex> a(static_cast<std::size_t>(order) + 1);
  a[1] = 1.0;
  for (int n = 2; n <= order; ++n) {
    a[static_cast<std::size_t>(n)] = 2.0 / test_multiplier(alpha, n);
  }
  return HarmonicMap(AnalyticSeries(std::move(a)), AnalyticSeries::zero());
}

HarmonicMap sharp_single(double alpha, int n) {
  require_alpha(alpha);
  if (n < 2) {
    throw parameter_error("sharp single family needs n >= 2");
  }
  std::vector<Complex> b(static_cast<std::size_t>(n) + 1);
  b[static_cast<std::size_t>(n)] = 1.0 / test_multiplier(alpha, n);
  return HarmonicMap(AnalyticSeries({{0.0, 0.0}, {1.0, 0.0}}),
                     AnalyticSeries(std::move(b)));
}

HarmonicMap random_member(double alpha, int order, std::uint64_t seed,
                          double slack) {
  require_alpha(alpha);
  if (order < 2) {
    throw parameter_error("random member needs order >= 2");
  }
  if (!(slack > 0.0) || !(slack < 1.0)) {
    throw parameter_error("slack must lie in (0, 1)");
  }
  SplitMix64 rng(seed);
  std::vector<Complex> a(static_cast<std::size_t>(order) + 1);
  std::vector<Complex> b(static_cast<std::size_t>(order) + 1);
  a[1] = 1.0;
  // Draw order per degree: |a_n|, arg a_n, |b_n|, arg b_n.
  for (int n = 2; n <= order; ++n) {
    double decay = 1.0 / (static_cast<double>(n) * n);
    double ra = rng.next_double() * decay;
    double pa = 2.0 * std::numbers::pi * rng.next_double();
    double rb = rng.next_double() * decay;
    double pb = 2.0 * std::numbers::pi * rng.next_double();
    a[static_cast<std::size_t>(n)] = Complex(ra * std::cos(pa), ra * std::sin(pa));
    b[static_cast<std::size_t>(n)] = Complex(rb * std::cos(pb), rb * std::sin(pb));
  }
  double sum = 0.0;
  for (int n = 2; n <= order; ++n) {
    sum += test_multiplier(alpha, n) * (std::abs(a[static_cast<std::size_t>(n)]) +
                                        std::abs(b[static_cast<std::size_t>(n)]));
  }
  if (sum <= 0.0) {
    throw evaluation_error("degenerate draw, all coefficients vanished");
  }
  double scale = (1.0 - slack) / sum;
  for (int n = 2; n <= order; ++n) {
    a[static_cast<std::size_t>(n)] *= scale;
    b[static_cast<std::size_t>(n)] *= scale;
  }
  return HarmonicMap(AnalyticSeries(std::move(a)), AnalyticSeries(std::move(b)));
}

std::pair<double, double> conjectured_bounds(int n) {
  if (n < 1) {
    throw parameter_error("coefficient index must be at least 1");
  }
  double an = (2.0 * n + 1.0) * (n + 1.0) / 6.0;
  double bn = (2.0 * n - 1.0) * (n - 1.0) / 6.0;
  return {an, bn};
}

const char* to_string(FamilyName name) {
  switch (name) {
    case FamilyName::harmonic_koebe: return "harmonic_koebe";
    case FamilyName::analytic_koebe: return "analytic_koebe";
    case FamilyName::sharp_sum: return "sharp_sum";
    case FamilyName::sharp_single: return "sharp_single";
    case FamilyName::random_member: return "random_member";
    case FamilyName::identity: return "identity";
  }
  return "unknown";
}

std::optional<FamilyName> family_from_string(const std::string& name) {
  if (name == "harmonic_koebe") return FamilyName::harmonic_koebe;
  if (name == "analytic_koebe") return FamilyName::analytic_koebe;
  if (name == "sharp_sum") return FamilyName::sharp_sum;
  if (name == "sharp_single") return FamilyName::sharp_single;
  if (name == "random_member") return FamilyName::random_member;
  if (name == "identity") return FamilyName::identity;
  return std::nullopt;
}

namespace {

struct ParamUse {
  bool alpha = false;
  bool n = false;
  bool order = false;
  bool seed = false;
  bool slack = false;
};

ParamUse required_params(FamilyName name) {
  switch (name) {
    case FamilyName::harmonic_koebe: return {.order = true};
    case FamilyName::analytic_koebe: return {.order = true};
    case FamilyName::sharp_sum: return {.alpha = true, .order = true};
    case FamilyName::sharp_single: return {.alpha = true, .n = true};
    case FamilyName::random_member:
      return {.alpha = true, .order = true, .seed = true, .slack = true};
    case FamilyName::identity: return {};
  }
  return {};
}

void check_param(const char* family, const char* param, bool required,
                 bool present) {
  if (required && !present) {
    throw parameter_error(std::string("family '") + family +
                          "' requires parameter '" + param + "'");
  }
  if (!required && present) {
    throw parameter_error(std::string("family '") + family +
                          "' does not take parameter '" + param + "'");
  }
}

}  // namespace

HarmonicMap build_family(const FamilySpec& spec) {
  const char* family = to_string(spec.name);
  ParamUse use = required_params(spec.name);
  check_param(family, "alpha", use.alpha, spec.alpha.has_value());
  check_param(family, "n", use.n, spec.n.has_value());
  check_param(family, "order", use.order, spec.order.has_value());
  check_param(family, "seed", use.seed, spec.seed.has_value());
  check_param(family, "slack", use.slack, spec.slack.has_value());

  switch (spec.name) {
    case FamilyName::harmonic_koebe:
      return harmonic_koebe(*spec.order);
    case FamilyName::analytic_koebe:
      return HarmonicMap(analytic_koebe(*spec.order), AnalyticSeries::zero());
    case FamilyName::sharp_sum:
      return sharp_sum(*spec.alpha, *spec.order);
    case FamilyName::sharp_single:
      return sharp_single(*spec.alpha, *spec.n);
    case FamilyName::random_member:
      return random_member(*spec.alpha, *spec.order, *spec.seed, *spec.slack);
    case FamilyName::identity:
      return HarmonicMap::identity();
  }
  throw parameter_error("unknown family");
}

}  // namespace walpha
