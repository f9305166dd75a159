#include "walpha/margins.hpp"

#include <cmath>
#include <vector>

#include "walpha/defaults.hpp"
#include "walpha/errors.hpp"

namespace walpha {

namespace {

void require_normalized(const AnalyticSeries& f) {
  if (std::abs(f.coeff(0)) > kSeriesTol || std::abs(f.coeff(1) - 1.0) > kSeriesTol) {
    throw parameter_error("series must be normalized to c_0 = 0, c_1 = 1");
  }
}

struct MinTracker {
  double value = 0.0;
  Complex arg{0.0, 0.0};
  bool seen = false;

  void offer(double v, Complex z) {
    if (!seen || v < value) {
      value = v;
      arg = z;
      seen = true;
    }
  }
};

MarginReport report_from(const MinTracker& t, const DiskGrid& grid,
                         std::string quantity) {
  return MarginReport{t.value, t.arg, grid.spec(), std::move(quantity)};
}

}  // namespace

MarginReport w_margin(const AnalyticSeries& f, AlphaParam alpha,
                      const DiskGrid& grid) {
  require_normalized(f);
  AnalyticSeries t = test_operator(f, alpha.value());
  MinTracker min;
  for (Complex z : grid.points()) {
    min.offer(evaluate(t, z).real(), z);
  }
  return report_from(min, grid, "w_margin");
}

MarginReport wh0_margin(const HarmonicMap& f, AlphaParam alpha,
                        const DiskGrid& grid) {
  AnalyticSeries th = test_operator(f.h(), alpha.value());
  AnalyticSeries tg = test_operator(f.g(), alpha.value());
  MinTracker min;
  for (Complex z : grid.points()) {
    double v = evaluate(th, z).real() - std::abs(evaluate(tg, z));
    min.offer(v, z);
  }
  return report_from(min, grid, "wh0_margin");
}

MarginReport epsilon_min_margin(const HarmonicMap& f, AlphaParam alpha,
                                const DiskGrid& grid,
                                const EpsilonSample& eps) {
  AnalyticSeries th = test_operator(f.h(), alpha.value());
  AnalyticSeries tg = test_operator(f.g(), alpha.value());
  auto points = grid.points();
  std::vector<Complex> a(points.size()), b(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    a[i] = evaluate(th, points[i]);
    b[i] = evaluate(tg, points[i]);
  }
  MinTracker min;
  for (Complex e : eps.values()) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      min.offer((a[i] + e * b[i]).real(), points[i]);
    }
  }
  return report_from(min, grid, "epsilon_min_margin");
}

double sufficient_condition_sum(const HarmonicMap& f, AlphaParam alpha) {
  int order = std::max(f.h().order(), f.g().order());
  double s = 0.0;
  for (int n = 2; n <= order; ++n) {
    s += test_multiplier(alpha.value(), n) *
         (std::abs(f.h().coeff(n)) + std::abs(f.g().coeff(n)));
  }
  return s;
}

MarginReport halfplane_margin(const AnalyticSeries& f, const DiskGrid& grid) {
  if (std::abs(f.coeff(0)) > kSeriesTol) {
    throw parameter_error("halfplane margin requires c_0 = 0");
  }
  // F(z)/z as a series, defined at the origin by its value c_1.
  std::vector<Complex> shifted(static_cast<std::size_t>(std::max(f.order(), 1)));
  for (int n = 1; n <= f.order(); ++n) {
    shifted[static_cast<std::size_t>(n - 1)] = f.coeff(n);
  }
  AnalyticSeries quotient{std::move(shifted)};
  MinTracker min;
  for (Complex z : grid.points()) {
    min.offer(evaluate(quotient, z).real() - 0.5, z);
  }
  return report_from(min, grid, "halfplane_margin");
}

MarginReport sense_preserving_margin(const HarmonicMap& f, const DiskGrid& grid) {
  AnalyticSeries hp = differentiate(f.h());
  AnalyticSeries gp = differentiate(f.g());
  MinTracker min;
  for (Complex z : grid.points()) {
    double v = std::norm(evaluate(hp, z)) - std::norm(evaluate(gp, z));
    min.offer(v, z);
  }
  return report_from(min, grid, "sense_preserving_margin");
}

MarginReport starlike_margin(const HarmonicMap& f, const DiskGrid& grid) {
  AnalyticSeries hp = differentiate(f.h());
  AnalyticSeries gp = differentiate(f.g());
  MinTracker min;
  auto points = grid.points();
  min.offer(1.0, points[0]);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Complex z = points[i];
    Complex value = evaluate(f.h(), z) + std::conj(evaluate(f.g(), z));
    if (std::abs(value) < kDegenerateTol) {
      throw degenerate_point_error(
          "image vanishes at grid point (" + std::to_string(z.real()) + ", " +
          std::to_string(z.imag()) + ")");
    }
    Complex num = z * evaluate(hp, z) - std::conj(z * evaluate(gp, z));
    min.offer((num / value).real(), z);
  }
  return report_from(min, grid, "starlike_margin");
}

}  // namespace walpha
