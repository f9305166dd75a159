#pragma once

#include <string>

#include "walpha/grid.hpp"
#include "walpha/harmonic.hpp"

namespace walpha {

// Minimum of a sampled quantity together with its witness point. Ties keep
// the first point in grid enumeration order.
struct MarginReport {
  double min_value = 0.0;
  Complex argmin{0.0, 0.0};
  GridSpec grid;
  std::string quantity;
};

// min over the grid of Re T_alpha[F](z) for a normalized analytic F
// (c_0 = 0, c_1 = 1). Positive values support membership of F in the
// analytic class; values below -1e-9 refute it on the sampled subdisk.
MarginReport w_margin(const AnalyticSeries& f, AlphaParam alpha,
                      const DiskGrid& grid);

// min over the grid of Re T_alpha[h](z) - |T_alpha[g](z)|, the defining
// inequality of the harmonic class.
MarginReport wh0_margin(const HarmonicMap& f, AlphaParam alpha,
                        const DiskGrid& grid);

// min over the sampled unimodular directions of the slice margin
// min_z Re T_alpha[h + eps g](z).
MarginReport epsilon_min_margin(const HarmonicMap& f, AlphaParam alpha,
                                const DiskGrid& grid,
                                const EpsilonSample& eps);

// S = sum_{n>=2} (alpha n^2 + (1-alpha) n)(|a_n| + |b_n|). S < 1 certifies
// membership outright.
double sufficient_condition_sum(const HarmonicMap& f, AlphaParam alpha);

// min over the grid of Re(F(z)/z) - 1/2 for F with c_0 = 0; the value at
// the origin is Re(c_1) - 1/2.
MarginReport halfplane_margin(const AnalyticSeries& f, const DiskGrid& grid);

// min over the grid of the Jacobian |h'|^2 - |g'|^2.
MarginReport sense_preserving_margin(const HarmonicMap& f, const DiskGrid& grid);

// min over the grid of Re[(z h'(z) - conj(z g'(z))) / f(z)], the angular
// derivative of arg f along circles. The origin contributes its limit 1.
MarginReport starlike_margin(const HarmonicMap& f, const DiskGrid& grid);

}  // namespace walpha
