#include "walpha/series.hpp"

#include <cmath>
#include <utility>

#include "walpha/errors.hpp"

namespace walpha {

namespace {

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

AnalyticSeries::AnalyticSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw construction_error("series requires at least the constant coefficient");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!finite(coeffs_[n])) {
      throw construction_error("series coefficient " + std::to_string(n) +
                               " is not finite");
    }
  }
}

AnalyticSeries AnalyticSeries::zero(int order) {
  if (order < 0) {
    throw parameter_error("series order must be nonnegative");
  }
  return AnalyticSeries(std::vector<Complex>(order + 1, Complex(0.0, 0.0)));
}

Complex AnalyticSeries::coeff(int n) const {
  if (n < 0) {
    throw parameter_error("coefficient index must be nonnegative");
  }
  if (n > order()) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(n)];
}

double test_multiplier(double alpha, int n) {
  return alpha * n * n + (1.0 - alpha) * n;
}

Complex evaluate(const AnalyticSeries& f, Complex z) {
  if (!finite(z)) {
    throw input_domain_error("evaluation point is not finite");
  }
  if (std::norm(z) > 1.0 + 1e-9) {
    throw input_domain_error("evaluation point lies outside the closed unit disk");
  }
  auto c = f.coeffs();
  Complex acc = c[c.size() - 1];
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * z + c[k];
  }
  return acc;
}

AnalyticSeries differentiate(const AnalyticSeries& f) {
  if (f.order() == 0) return AnalyticSeries::zero();
  std::vector<Complex> out(static_cast<std::size_t>(f.order()));
  for (int n = 1; n <= f.order(); ++n) {
    out[static_cast<std::size_t>(n - 1)] = static_cast<double>(n) * f.coeff(n);
  }
  return AnalyticSeries(std::move(out));
}

AnalyticSeries test_operator(const AnalyticSeries& f, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw parameter_error("alpha must be finite and nonnegative");
  }
  if (f.order() == 0) return AnalyticSeries::zero();
  std::vector<Complex> out(static_cast<std::size_t>(f.order()));
  for (int n = 1; n <= f.order(); ++n) {
    out[static_cast<std::size_t>(n - 1)] = test_multiplier(alpha, n) * f.coeff(n);
  }
  return AnalyticSeries(std::move(out));
}

AnalyticSeries hadamard(const AnalyticSeries& a, const AnalyticSeries& b) {
  int order = std::min(a.order(), b.order());
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] = a.coeff(n) * b.coeff(n);
  }
  return AnalyticSeries(std::move(out));
}

AnalyticSeries dilate(const AnalyticSeries& f, double r) {
  if (!(r > 0.0) || !(r <= 1.0)) {
    throw parameter_error("dilation radius must lie in (0, 1]");
  }
  std::vector<Complex> out(static_cast<std::size_t>(f.order()) + 1);
  out[0] = f.coeff(0) / r;
  double p = 1.0;
  for (int n = 1; n <= f.order(); ++n) {
    out[static_cast<std::size_t>(n)] = f.coeff(n) * p;
    p *= r;
  }
  return AnalyticSeries(std::move(out));
}

bool approx_equal(const AnalyticSeries& a, const AnalyticSeries& b, double tol) {
  int longer = std::max(a.order(), b.order());
  for (int n = 0; n <= longer; ++n) {
    if (std::abs(a.coeff(n) - b.coeff(n)) > tol) return false;
  }
  return true;
}

}  // namespace walpha
