#pragma once

#include <span>
#include <vector>

#include "walpha/series.hpp"

namespace walpha {

// Class parameter alpha >= 0.
class AlphaParam {
 public:
  explicit AlphaParam(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Planar harmonic mapping f = h + conj(g) in normalized form:
// a_0 = 0, a_1 = 1 for h and b_0 = b_1 = 0 for g. The analytic parts are
// stored unconjugated.
class HarmonicMap {
 public:
  HarmonicMap(AnalyticSeries h, AnalyticSeries g);

  static HarmonicMap identity();

  const AnalyticSeries& h() const { return h_; }
  const AnalyticSeries& g() const { return g_; }

 private:
  AnalyticSeries h_;
  AnalyticSeries g_;
};

// K unimodular directions eps_k = exp(2 pi i k / K), k = 0..K-1.
class EpsilonSample {
 public:
  explicit EpsilonSample(int count);

  int count() const { return static_cast<int>(values_.size()); }
  std::span<const Complex> values() const { return values_; }

 private:
  std::vector<Complex> values_;
};

// Analytic slice h + eps g for a unimodular eps (|eps| = 1 within 1e-12).
AnalyticSeries slice(const HarmonicMap& f, Complex eps);

// f(z) = h(z) + conj(g(z)).
Complex evaluate_harmonic(const HarmonicMap& f, Complex z);

// |h'(z)|^2 - |g'(z)|^2.
double jacobian(const HarmonicMap& f, Complex z);

// s_{p,q}(f): h truncated to degree p, g truncated to degree q.
// Requires p, q >= 1.
HarmonicMap section(const HarmonicMap& f, int p, int q);

bool approx_equal(const HarmonicMap& a, const HarmonicMap& b,
                  double tol = kSeriesTol);

}  // namespace walpha
