#pragma once

#include <string>
#include <utility>
#include <vector>

#include "walpha/grid.hpp"
#include "walpha/harmonic.hpp"

namespace walpha {

// Bounds for degree n >= 2 at class parameter alpha:
//   |b_n|                          <= 1/(alpha n^2 + (1-alpha) n)
//   |a_n| + |b_n|, ||a_n| - |b_n||,
//   |a_n|                          <= 2/(alpha n^2 + (1-alpha) n).
// Returns the pair (single-coefficient bound, combined bound).
std::pair<double, double> coefficient_bound(double alpha, int n);

struct BoundRow {
  int n = 0;
  std::string quantity;
  double observed = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  bool all_satisfied = true;
};

// Checks every coefficient inequality above for 2 <= n <= order(f).
// A row is satisfied when observed <= bound + 1e-12.
BoundReport verify_coefficient_bounds(const HarmonicMap& f, AlphaParam alpha);

// Radial modulus envelope, valid for members when 0 < alpha <= 1:
//   lower(r) = r + 2 sum_{n>=2} (-1)^{n-1} r^n / (alpha n^2 + (1-alpha) n)
//   upper(r) = r + 2 sum_{n>=2} r^n / (alpha n^2 + (1-alpha) n).
// Sums are truncated at degree terms; the reported lower and upper have the
// tail bound 2 r^{terms+1} / ((1-r)(alpha (terms+1)^2 + (1-alpha)(terms+1)))
// subtracted and added respectively.
struct GrowthEnvelope {
  double r = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double tail_bound = 0.0;
  bool in_hypothesis = true;
};

// Requires 0 < r < 1. Outside alpha in (0, 1] this throws unless
// allow_out_of_hypothesis is set; the result is then labeled accordingly.
GrowthEnvelope growth_envelope(double alpha, double r, int terms,
                               bool allow_out_of_hypothesis = false);

struct GrowthViolation {
  Complex point{0.0, 0.0};
  double modulus = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct GrowthReport {
  bool all_inside = true;
  bool in_hypothesis = true;
  std::vector<GrowthViolation> violations;
};

// Checks lower(|z|) - 1e-9 <= |f(z)| <= upper(|z|) + 1e-9 at every grid
// point, with the envelope truncated at degree terms.
GrowthReport verify_growth(const HarmonicMap& f, AlphaParam alpha,
                           const DiskGrid& grid, int terms,
                           bool allow_out_of_hypothesis = false);

struct ConvexNullReport {
  bool pass = true;
  // First index k with c_{k-1} - c_k < c_k - c_{k+1} or c_k - c_{k+1} < 0,
  // together with the offending consecutive values.
  int violation_index = -1;
  double c_prev = 0.0;
  double c_mid = 0.0;
  double c_next = 0.0;
};

// Builds c_0 = 1, c_{n-1} = 2/(alpha n^2 + (1-alpha) n) for n >= 2 up to
// index count and checks that the sequence has nonincreasing, nonnegative
// differences. Requires count >= 3.
ConvexNullReport convex_null_check(double alpha, int count);

}  // namespace walpha
