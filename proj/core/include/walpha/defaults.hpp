#pragma once

#include <cstdint>

namespace walpha {

// Shared default parameters. Every command line flag and environment
// variable override lands in one instance of this struct.
struct Defaults {
  int order = 64;             // truncation order for infinite families
  int grid_radial = 64;       // radial rings of the sampling grid
  int grid_angular = 720;     // angular samples per ring
  double r_max = 0.999;       // outermost ring radius
  int eps_samples = 360;      // unimodular slice directions
  double tol = 1e-9;          // root finding tolerance
  std::uint64_t seed = 20240901;  // seed for generated members
};

// Tolerances fixed across the library.
inline constexpr double kSeriesTol = 1e-12;      // coefficient comparisons
inline constexpr double kRefutationTol = 1e-9;   // margin below -this refutes
inline constexpr double kDegenerateTol = 1e-12;  // |f(z)| below this is degenerate

}  // namespace walpha
