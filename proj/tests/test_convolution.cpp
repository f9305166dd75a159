// Coefficientwise products of maps, convolution with one analytic factor,
// and convex combinations, with their closure properties.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "walpha/convolution.hpp"
#include "walpha/errors.hpp"
#include "walpha/extremals.hpp"
#include "walpha/margins.hpp"
#include "walpha/rng.hpp"

using walpha::AlphaParam;
using walpha::AnalyticSeries;
using walpha::Complex;
using walpha::DiskGrid;
using walpha::HarmonicMap;

namespace {

// h and g with every admissible coefficient 1: the convolution identity.
HarmonicMap all_ones_map(int order) {
  std::vector<Complex> h(static_cast<std::size_t>(order) + 1, Complex(1, 0));
  std::vector<Complex> g(static_cast<std::size_t>(order) + 1, Complex(1, 0));
  h[0] = Complex(0, 0);
  g[0] = Complex(0, 0);
  g[1] = Complex(0, 0);
  return HarmonicMap(AnalyticSeries(h), AnalyticSeries(g));
}

AnalyticSeries all_ones_series(int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex(1, 0));
  c[0] = Complex(0, 0);
  return AnalyticSeries(c);
}

}  // namespace

TEST_CASE("harmonic_convolve: the all-ones map is the identity") {
  HarmonicMap f = walpha::random_member(1.0, 12, 50, 0.5);
  HarmonicMap conv = walpha::harmonic_convolve(f, all_ones_map(12));
  CHECK(walpha::approx_equal(conv, f, 1e-15));
}

TEST_CASE("harmonic_convolve: squares a single sharp coefficient") {
  HarmonicMap f = walpha::sharp_single(1.0, 2);
  HarmonicMap conv = walpha::harmonic_convolve(f, f);
  CHECK(conv.g().coeff(2).real() == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK(conv.h().order() == 1);
}

TEST_CASE("harmonic_convolve: commutative, associative up to truncation") {
  HarmonicMap a = walpha::random_member(1.0, 10, 61, 0.5);
  HarmonicMap b = walpha::random_member(1.0, 10, 62, 0.5);
  HarmonicMap c = walpha::random_member(1.0, 10, 63, 0.5);
  CHECK(walpha::approx_equal(walpha::harmonic_convolve(a, b),
                             walpha::harmonic_convolve(b, a), 1e-15));
  CHECK(walpha::approx_equal(
      walpha::harmonic_convolve(walpha::harmonic_convolve(a, b), c),
      walpha::harmonic_convolve(a, walpha::harmonic_convolve(b, c)), 1e-15));
}

TEST_CASE("harmonic_convolve: member pairs keep a nonnegative margin") {
  DiskGrid grid(0.999, 16, 90);
  for (std::uint64_t seed : {70ull, 72ull, 74ull}) {
    HarmonicMap a = walpha::random_member(1.0, 12, seed, 0.5);
    HarmonicMap b = walpha::random_member(1.0, 12, seed + 1, 0.5);
    HarmonicMap conv = walpha::harmonic_convolve(a, b);
    CHECK(walpha::wh0_margin(conv, AlphaParam(1.0), grid).min_value > -1e-9);
  }
}

TEST_CASE("tilde_convolve: all-ones factor leaves the map unchanged") {
  HarmonicMap f = walpha::random_member(1.0, 12, 80, 0.5);
  CHECK(walpha::approx_equal(walpha::tilde_convolve(f, all_ones_series(12)), f,
                             1e-15));
}

TEST_CASE("tilde_convolve: the bare identity factor kills higher terms") {
  HarmonicMap f = walpha::random_member(1.0, 12, 81, 0.5);
  HarmonicMap conv = walpha::tilde_convolve(f, all_ones_series(1));
  CHECK(walpha::approx_equal(conv, HarmonicMap::identity(), 1e-15));
}

TEST_CASE("tilde_convolve: rejects an unnormalized factor") {
  HarmonicMap f = HarmonicMap::identity();
  CHECK_THROWS_AS(
      walpha::tilde_convolve(
          f, AnalyticSeries({Complex(1, 0), Complex(1, 0)})),
      walpha::parameter_error);
  CHECK_THROWS_AS(
      walpha::tilde_convolve(
          f, AnalyticSeries({Complex(0, 0), Complex(2, 0)})),
      walpha::parameter_error);
}

TEST_CASE("tilde_convolve: half-plane factor preserves membership") {
  // The factor is the truncated geometric series; its half-plane property
  // is grid-verified before the closure claim is exercised.
  AnalyticSeries phi = all_ones_series(8192);
  DiskGrid grid(0.999, 16, 180);
  CHECK(walpha::halfplane_margin(phi, grid).min_value > 0.0);
  for (std::uint64_t seed : {90ull, 91ull, 92ull}) {
    HarmonicMap f = walpha::random_member(1.0, 16, seed, 0.5);
    HarmonicMap conv = walpha::tilde_convolve(f, phi);
    CHECK(walpha::wh0_margin(conv, AlphaParam(1.0), grid).min_value > -1e-9);
  }
}

TEST_CASE("convex_combination: a single unit weight returns the member") {
  HarmonicMap f = walpha::random_member(1.0, 10, 100, 0.5);
  HarmonicMap combo = walpha::convex_combination({1.0}, {f});
  CHECK(walpha::approx_equal(combo, f, 0.0));
}

TEST_CASE("convex_combination: equal halves of one member reproduce it") {
  HarmonicMap f = walpha::random_member(1.0, 10, 101, 0.5);
  HarmonicMap combo = walpha::convex_combination({0.5, 0.5}, {f, f});
  CHECK(walpha::approx_equal(combo, f, 1e-15));
}

TEST_CASE("convex_combination: zero-pads members of different orders") {
  HarmonicMap low = walpha::sharp_single(1.0, 2);
  HarmonicMap high = walpha::random_member(1.0, 8, 102, 0.5);
  HarmonicMap combo = walpha::convex_combination({0.25, 0.75}, {low, high});
  CHECK(combo.g().order() == 8);
  CHECK(std::abs(combo.g().coeff(2) -
                 (0.25 * low.g().coeff(2) + 0.75 * high.g().coeff(2))) <=
        1e-15);
  CHECK(std::abs(combo.g().coeff(8) - 0.75 * high.g().coeff(8)) <= 1e-15);
}

TEST_CASE("convex_combination: weight validation") {
  HarmonicMap f = HarmonicMap::identity();
  CHECK_THROWS_AS(walpha::convex_combination({0.5, 0.4}, {f, f}),
                  walpha::parameter_error);
  CHECK_THROWS_AS(walpha::convex_combination({1.5, -0.5}, {f, f}),
                  walpha::parameter_error);
  CHECK_THROWS_AS(walpha::convex_combination({1.0}, {f, f}),
                  walpha::parameter_error);
  CHECK_THROWS_AS(walpha::convex_combination({}, {}), walpha::parameter_error);
}

TEST_CASE("convex_combination: members stay members") {
  DiskGrid grid(0.999, 16, 90);
  std::vector<HarmonicMap> members;
  std::vector<double> weights;
  walpha::SplitMix64 rng(110);
  double total = 0.0;
  for (int i = 0; i < 5; ++i) {
    members.push_back(
        walpha::random_member(1.0, 12, 120 + static_cast<std::uint64_t>(i), 0.5));
    double w = rng.next_double() + 1e-3;
    weights.push_back(w);
    total += w;
  }
  for (double& w : weights) w /= total;
  double correction = 1.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) correction -= weights[i];
  weights.back() = correction;
  HarmonicMap combo = walpha::convex_combination(weights, members);
  CHECK(walpha::wh0_margin(combo, AlphaParam(1.0), grid).min_value > -1e-9);
}
