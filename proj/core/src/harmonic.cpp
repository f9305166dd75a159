#include "walpha/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "walpha/errors.hpp"

namespace walpha {

AlphaParam::AlphaParam(double value) : value_(value) {
  if (!std::isfinite(value_) || value_ < 0.0) {
    throw parameter_error("alpha must be finite and nonnegative");
  }
}

HarmonicMap::HarmonicMap(AnalyticSeries h, AnalyticSeries g)
    : h_(std::move(h)), g_(std::move(g)) {
  if (std::abs(h_.coeff(0)) > kSeriesTol) {
    throw construction_error("normalization a_0 = 0 violated");
  }
  if (std::abs(h_.coeff(1) - 1.0) > kSeriesTol) {
    throw construction_error("normalization a_1 = 1 violated");
  }
  if (std::abs(g_.coeff(0)) > kSeriesTol) {
    throw construction_error("normalization b_0 = 0 violated");
  }
  if (std::abs(g_.coeff(1)) > kSeriesTol) {
    throw construction_error("normalization b_1 = 0 violated");
  }
}

HarmonicMap HarmonicMap::identity() {
  return HarmonicMap(AnalyticSeries({{0.0, 0.0}, {1.0, 0.0}}),
                     AnalyticSeries::zero());
}

EpsilonSample::EpsilonSample(int count) {
  if (count < 1) {
    throw parameter_error("epsilon sample count must be at least 1");
  }
  values_.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    double theta = 2.0 * std::numbers::pi * k / count;
    values_.emplace_back(std::cos(theta), std::sin(theta));
  }
}

AnalyticSeries slice(const HarmonicMap& f, Complex eps) {
  if (std::abs(std::abs(eps) - 1.0) > 1e-12) {
    throw parameter_error("slice direction must be unimodular");
  }
  int order = std::max(f.h().order(), f.g().order());
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = f.h().coeff(n) + eps * f.g().coeff(n);
  }
  return AnalyticSeries(std::move(out));
}

Complex evaluate_harmonic(const HarmonicMap& f, Complex z) {
  return evaluate(f.h(), z) + std::conj(evaluate(f.g(), z));
}

double jacobian(const HarmonicMap& f, Complex z) {
  Complex hp = evaluate(differentiate(f.h()), z);
  Complex gp = evaluate(differentiate(f.g()), z);
  return std::norm(hp) - std::norm(gp);
}

namespace {

AnalyticSeries truncate(const AnalyticSeries& f, int degree) {
  int order = std::min(f.order(), degree);
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = f.coeff(n);
  }
  return AnalyticSeries(std::move(out));
}

}  // namespace

HarmonicMap section(const HarmonicMap& f, int p, int q) {
  if (p < 1 || q < 1) {
    throw parameter_error("section degrees must be at least 1");
  }
  return HarmonicMap(truncate(f.h(), p), truncate(f.g(), q));
}

bool approx_equal(const HarmonicMap& a, const HarmonicMap& b, double tol) {
  return approx_equal(a.h(), b.h(), tol) && approx_equal(a.g(), b.g(), tol);
}

}  // namespace walpha
