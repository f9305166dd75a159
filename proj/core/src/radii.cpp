#include "walpha/radii.hpp"

#include <cmath>

#include "walpha/errors.hpp"
#include "walpha/margins.hpp"

namespace walpha {

HarmonicMap dilate(const HarmonicMap& f, double r) {
  return HarmonicMap(dilate(f.h(), r), dilate(f.g(), r));
}

RadiusResult bisect_root(const std::function<double(double)>& objective,
                         double lo, double hi, double tol) {
  if (!(lo < hi)) {
    throw parameter_error("bisection needs lo < hi");
  }
  if (!(tol > 0.0)) {
    throw parameter_error("bisection tolerance must be positive");
  }
  auto eval = [&](double x) {
    double v = objective(x);
    if (!std::isfinite(v)) {
      throw evaluation_error("objective is not finite at " + std::to_string(x));
    }
    return v;
  };
  double flo = eval(lo);
  double fhi = eval(hi);
  if (flo == 0.0) {
    return RadiusResult{lo, lo, lo, 0.0, 0, "bisection"};
  }
  if (fhi == 0.0) {
    return RadiusResult{hi, hi, hi, 0.0, 0, "bisection"};
  }
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw bracket_error("objective does not change sign over the bracket");
  }
  int iterations = 0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fmid = eval(mid);
    ++iterations;
    if (fmid == 0.0) {
      return RadiusResult{mid, mid, mid, 0.0, iterations, "bisection"};
    }
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double value = 0.5 * (lo + hi);
  return RadiusResult{value, lo, hi, std::abs(eval(value)), iterations,
                      "bisection"};
}

RadiusResult quintic_radius(double tol) {
  if (!(tol > 0.0)) {
    throw parameter_error("tolerance must be positive");
  }
  auto poly = [](double r) {
    return 1.0 - 2.0 * r - r * r * r * (1.0 + r + r * r);
  };
  // The polynomial falls through zero with slope about -3, so the bracket
  // is tightened past tol until the residual meets it as well.
  RadiusResult result = bisect_root(poly, 0.0, 0.5, tol / 16.0);
  result.method = "bisection";
  return result;
}

double golden_radius() {
  return (3.0 - std::sqrt(5.0)) / 2.0;
}

const char* to_string(SectionCase c) {
  switch (c) {
    case SectionCase::linear_h: return "linear_h";
    case SectionCase::half_p_lt_q: return "half_p_lt_q";
    case SectionCase::half_p_eq_q: return "half_p_eq_q";
    case SectionCase::half_p_gt_q: return "half_p_gt_q";
    case SectionCase::half_p3_q2: return "half_p3_q2";
    case SectionCase::golden_p2: return "golden_p2";
    case SectionCase::quintic_q2: return "quintic_q2";
    case SectionCase::unspecified: return "unspecified";
  }
  return "unknown";
}

CaseRadius case_radius(int p, int q) {
  if (p < 1 || q < 1) {
    throw parameter_error("section degrees must be at least 1");
  }
  if (q == 1) {
    return {SectionCase::unspecified, std::nullopt};
  }
  if (p == 1) {
    return {SectionCase::linear_h, 0.5};
  }
  if (p == q) {
    return {SectionCase::half_p_eq_q, 0.5};
  }
  if (p == 2) {
    return {SectionCase::golden_p2, golden_radius()};
  }
  if (q == 2) {
    if (p == 3) {
      return {SectionCase::half_p3_q2, 0.5};
    }
    return {SectionCase::quintic_q2, quintic_radius(1e-9).value};
  }
  if (p < q) {
    return {SectionCase::half_p_lt_q, 0.5};
  }
  return {SectionCase::half_p_gt_q, 0.5};
}

double cubic_section_min(const HarmonicMap& f, AlphaParam alpha,
                         const EpsilonSample& eps, const DiskGrid& grid) {
  if (grid.spec().r_max > 0.5) {
    throw parameter_error("cubic section minimum is sampled on r_max <= 1/2");
  }
  HarmonicMap s3 = section(f, 3, 3);
  AnalyticSeries th = test_operator(s3.h(), alpha.value());
  AnalyticSeries tg = test_operator(s3.g(), alpha.value());
  auto points = grid.points();
  std::vector<Complex> a(points.size()), b(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    a[i] = evaluate(th, points[i]);
    b[i] = evaluate(tg, points[i]);
  }
  bool seen = false;
  double min = 0.0;
  for (Complex e : eps.values()) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      double v = (a[i] + e * b[i]).real();
      if (!seen || v < min) {
        min = v;
        seen = true;
      }
    }
  }
  return min;
}

RadiusResult section_radius(const HarmonicMap& f, AlphaParam alpha, int p,
                            int q, const DiskGrid& grid, double tol) {
  if (!(tol > 0.0)) {
    throw parameter_error("tolerance must be positive");
  }
  HarmonicMap s = section(f, p, q);
  auto margin_at = [&](double r) {
    return wh0_margin(dilate(s, r), alpha, grid).min_value;
  };

  constexpr double kStep = 0.05;
  double last_good = 0.0;
  double first_bad = 0.0;
  bool found_bad = false;
  for (int i = 1; i <= 20; ++i) {
    double r = kStep * i;
    if (r > 1.0) r = 1.0;
    if (margin_at(r) >= 0.0) {
      last_good = r;
    } else {
      first_bad = r;
      found_bad = true;
      break;
    }
  }
  if (!found_bad) {
    return RadiusResult{1.0, last_good, 1.0, margin_at(1.0), 0, "scan-saturated"};
  }
  if (last_good == 0.0) {
    // Margin already negative at the first scan step; search below it.
    // The margin at r -> 0 tends to 1, so a root lies in (0, first_bad).
    last_good = 1e-6;
    if (margin_at(last_good) < 0.0) {
      return RadiusResult{0.0, 0.0, first_bad, 0.0, 0, "scan-exhausted"};
    }
  }
  RadiusResult result = bisect_root(margin_at, last_good, first_bad, tol);
  result.method = "scan+bisection";
  return result;
}

}  // namespace walpha
