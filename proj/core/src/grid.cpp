#include "walpha/grid.hpp"

#include <cmath>
#include <numbers>

#include "walpha/errors.hpp"

namespace walpha {

DiskGrid::DiskGrid(double r_max, int radial_count, int angular_count)
    : DiskGrid(GridSpec{r_max, radial_count, angular_count}) {}

DiskGrid::DiskGrid(const GridSpec& spec) : spec_(spec) {
  if (!std::isfinite(spec_.r_max) || spec_.r_max <= 0.0 || spec_.r_max >= 1.0) {
    throw parameter_error("grid radius must lie in (0, 1)");
  }
  if (spec_.radial_count < 2) {
    throw parameter_error("grid needs at least 2 radial rings");
  }
  if (spec_.angular_count < 8) {
    throw parameter_error("grid needs at least 8 angular samples");
  }

  radii_.reserve(static_cast<std::size_t>(spec_.radial_count));
  points_.reserve(1 + static_cast<std::size_t>(spec_.radial_count) *
                          static_cast<std::size_t>(spec_.angular_count));
  points_.emplace_back(0.0, 0.0);
  for (int j = 1; j <= spec_.radial_count; ++j) {
    double r = spec_.r_max * (static_cast<double>(j) / spec_.radial_count);
    radii_.push_back(r);
    for (int k = 0; k < spec_.angular_count; ++k) {
      double theta = 2.0 * std::numbers::pi * k / spec_.angular_count;
      points_.emplace_back(r * std::cos(theta), r * std::sin(theta));
    }
  }
}

int DiskGrid::ring_of(std::size_t point_index) const {
  if (point_index == 0) return 0;
  return 1 + static_cast<int>((point_index - 1) /
                              static_cast<std::size_t>(spec_.angular_count));
}

}  // namespace walpha
