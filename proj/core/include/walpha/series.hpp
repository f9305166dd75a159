#pragma once

#include <complex>
#include <span>
#include <vector>

#include "walpha/defaults.hpp"

namespace walpha {

using Complex = std::complex<double>;

// Truncated power series c_0 + c_1 z + ... + c_N z^N on the closed unit disk.
class AnalyticSeries {
 public:
  // Coefficients indexed by degree. Must be nonempty and finite.
  explicit AnalyticSeries(std::vector<Complex> coeffs);

  static AnalyticSeries zero(int order = 0);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of z^n; zero beyond the truncation order.
  Complex coeff(int n) const;

  std::span<const Complex> coeffs() const { return coeffs_; }

 private:
  std::vector<Complex> coeffs_;
};

// Multiplier alpha n^2 + (1 - alpha) n attached to degree n by the
// differential operator below. Shared by the coefficient bounds and the
// sharp families so that equalities hold bit for bit.
double test_multiplier(double alpha, int n);

// Horner evaluation, highest degree first. Requires |z| <= 1 and finite z.
Complex evaluate(const AnalyticSeries& f, Complex z);

// Derivative series; the derivative of a constant is the zero series.
AnalyticSeries differentiate(const AnalyticSeries& f);

// T_alpha[F] = F' + alpha z F''. The coefficient of z^{n-1} in the result
// is (alpha n^2 + (1 - alpha) n) c_n. Requires alpha >= 0.
AnalyticSeries test_operator(const AnalyticSeries& f, double alpha);

// Coefficientwise product; the order is the shorter of the two.
AnalyticSeries hadamard(const AnalyticSeries& a, const AnalyticSeries& b);

// F_r(z) = F(rz)/r, i.e. c_n -> c_n r^{n-1}. Requires 0 < r <= 1.
AnalyticSeries dilate(const AnalyticSeries& f, double r);

// Coefficientwise comparison up to the shorter order; the excess
// coefficients of the longer series must stay below tol.
bool approx_equal(const AnalyticSeries& a, const AnalyticSeries& b,
                  double tol = kSeriesTol);

}  // namespace walpha
