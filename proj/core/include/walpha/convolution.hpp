#pragma once

#include <vector>

#include "walpha/harmonic.hpp"

namespace walpha {

// Coefficientwise product of the h parts and of the g parts. The order of
// each part is the shorter of the operands.
HarmonicMap harmonic_convolve(const HarmonicMap& a, const HarmonicMap& b);

// f with an analytic phi: h * phi and g * phi coefficientwise. Requires phi
// normalized to c_0 = 0, c_1 = 1.
HarmonicMap tilde_convolve(const HarmonicMap& f, const AnalyticSeries& phi);

// Weighted sum with nonnegative weights of total 1 (within 1e-12); the
// shorter maps are zero-padded to the longest order.
HarmonicMap convex_combination(const std::vector<double>& weights,
                               const std::vector<HarmonicMap>& members);

}  // namespace walpha
