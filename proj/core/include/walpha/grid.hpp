#pragma once

#include <span>
#include <vector>

#include "walpha/series.hpp"

namespace walpha {

struct GridSpec {
  double r_max = 0.999;
  int radial_count = 64;
  int angular_count = 720;
};

// Deterministic polar sampling of the disk |z| <= r_max: the origin first,
// then rings r_j = r_max j / radial_count for j = 1..radial_count, each ring
// sampled at theta_k = 2 pi k / angular_count for k = 0..angular_count-1.
// Ring index is the outer loop, angle the inner one.
class DiskGrid {
 public:
  DiskGrid(double r_max, int radial_count, int angular_count);
  explicit DiskGrid(const GridSpec& spec);

  static DiskGrid defaults() { return DiskGrid(GridSpec{}); }

  const GridSpec& spec() const { return spec_; }
  std::span<const Complex> points() const { return points_; }
  std::span<const double> ring_radii() const { return radii_; }

  // Index of the ring a point belongs to; 0 is the origin.
  int ring_of(std::size_t point_index) const;

 private:
  GridSpec spec_;
  std::vector<Complex> points_;
  std::vector<double> radii_;
};

}  // namespace walpha
