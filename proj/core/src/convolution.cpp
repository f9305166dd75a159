#include "walpha/convolution.hpp"

#include <algorithm>
#include <cmath>

#include "walpha/defaults.hpp"
#include "walpha/errors.hpp"

namespace walpha {

HarmonicMap harmonic_convolve(const HarmonicMap& a, const HarmonicMap& b) {
  return HarmonicMap(hadamard(a.h(), b.h()), hadamard(a.g(), b.g()));
}

HarmonicMap tilde_convolve(const HarmonicMap& f, const AnalyticSeries& phi) {
  if (std::abs(phi.coeff(0)) > kSeriesTol ||
      std::abs(phi.coeff(1) - 1.0) > kSeriesTol) {
    throw parameter_error("convolver must be normalized to c_0 = 0, c_1 = 1");
  }
  return HarmonicMap(hadamard(f.h(), phi), hadamard(f.g(), phi));
}

HarmonicMap convex_combination(const std::vector<double>& weights,
                               const std::vector<HarmonicMap>& members) {
  if (members.empty() || weights.size() != members.size()) {
    throw parameter_error("weights and members must be nonempty and match");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw parameter_error("weights must be finite and nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw parameter_error("weights must sum to 1");
  }

  int order = 0;
  for (const HarmonicMap& m : members) {
    order = std::max({order, m.h().order(), m.g().order()});
  }
  std::vector<Complex> h(static_cast<std::size_t>(order) + 1);
  std::vector<Complex> g(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int n = 0; n <= order; ++n) {
      h[static_cast<std::size_t>(n)] += weights[i] * members[i].h().coeff(n);
      g[static_cast<std::size_t>(n)] += weights[i] * members[i].g().coeff(n);
    }
  }
  return HarmonicMap(AnalyticSeries(std::move(h)), AnalyticSeries(std::move(g)));
}

}  // namespace walpha
