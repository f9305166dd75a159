#pragma once

#include <functional>
#include <optional>
#include <string>

#include "walpha/grid.hpp"
#include "walpha/harmonic.hpp"

namespace walpha {

struct RadiusResult {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;
  int iterations = 0;
  std::string method;
};

// Dilates both analytic parts: f_r(z) = f(rz)/r. Transports membership on
// |z| < r to membership of the dilated map on the full disk.
HarmonicMap dilate(const HarmonicMap& f, double r);

// Standard bisection of a continuous sign-changing objective on [lo, hi]
// down to bracket width <= tol. The returned value is the final midpoint.
RadiusResult bisect_root(const std::function<double(double)>& objective,
                         double lo, double hi, double tol);

// Unique root in [0, 0.5] of 1 - 2r - r^3 - r^4 - r^5, about 0.433797.
RadiusResult quintic_radius(double tol);

// (3 - sqrt(5))/2, about 0.381966; satisfies 2r + r^2/(1 - r) = 1.
double golden_radius();

// Classification of a section pair (p, q) by the shape of the guarantee.
enum class SectionCase {
  linear_h,     // p = 1, q >= 2: radius 1/2
  half_p_lt_q,  // 3 <= p < q: radius 1/2
  half_p_eq_q,  // p = q >= 2: radius 1/2
  half_p_gt_q,  // p > q >= 3: radius 1/2
  half_p3_q2,   // p = 3, q = 2: radius 1/2
  golden_p2,    // p = 2 < q: radius (3 - sqrt(5))/2
  quintic_q2,   // p >= 4, q = 2: the quintic root
  unspecified,  // q = 1: no guarantee
};

const char* to_string(SectionCase c);

struct CaseRadius {
  SectionCase tag = SectionCase::unspecified;
  std::optional<double> radius;
};

// Guaranteed membership radius for the section s_{p,q} of any member.
// Requires p, q >= 1. Total: every pair maps to exactly one case.
CaseRadius case_radius(int p, int q);

// min over sampled directions eps and a grid with r_max <= 1/2 of
// Re T_alpha[s_3(h) + eps s_3(g)](z). At least 1/4 for members.
double cubic_section_min(const HarmonicMap& f, AlphaParam alpha,
                         const EpsilonSample& eps, const DiskGrid& grid);

// Largest dilation radius at which the section s_{p,q}(f) keeps a
// nonnegative class margin on the grid. The bracket is found by scanning r
// in steps of 0.05 and then bisected to width tol.
RadiusResult section_radius(const HarmonicMap& f, AlphaParam alpha, int p,
                            int q, const DiskGrid& grid, double tol);

}  // namespace walpha
