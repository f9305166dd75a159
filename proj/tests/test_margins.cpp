// Grid sampling and the class-condition margins: the analytic and harmonic
// class inequalities, slice minimization, the certifying coefficient sum,
// half-plane and Jacobian margins, and starlikeness.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "walpha/errors.hpp"
#include "walpha/extremals.hpp"
#include "walpha/grid.hpp"
#include "walpha/margins.hpp"

using walpha::AlphaParam;
using walpha::AnalyticSeries;
using walpha::Complex;
using walpha::DiskGrid;
using walpha::HarmonicMap;

namespace {

AnalyticSeries make(std::vector<Complex> c) { return AnalyticSeries(std::move(c)); }

// Margin of the defining inequality recomputed through differentiate and
// plain arithmetic, independent of the operator implementation.
double direct_margin(const HarmonicMap& f, double alpha, Complex z) {
  AnalyticSeries h1 = walpha::differentiate(f.h());
  AnalyticSeries h2 = walpha::differentiate(h1);
  AnalyticSeries g1 = walpha::differentiate(f.g());
  AnalyticSeries g2 = walpha::differentiate(g1);
  Complex th = walpha::evaluate(h1, z) + alpha * z * walpha::evaluate(h2, z);
  Complex tg = walpha::evaluate(g1, z) + alpha * z * walpha::evaluate(g2, z);
  return th.real() - std::abs(tg);
}

}  // namespace

TEST_CASE("grid: origin first, rings outside in, deterministic") {
  DiskGrid grid(0.8, 4, 8);
  auto pts = grid.points();
  CHECK(pts.size() == 1 + 4 * 8);
  CHECK(pts[0] == Complex(0, 0));
  CHECK(pts[1].real() == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(pts[1].imag() == 0.0);
  // Ring radii are exact multiples, the last one exactly r_max.
  CHECK(grid.ring_radii().size() == 4);
  CHECK(grid.ring_radii()[3] == 0.8);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(std::abs(pts[i]) <= 0.8 + 1e-15);
  }
  CHECK(grid.ring_of(0) == 0);
  CHECK(grid.ring_of(1) == 1);
  CHECK(grid.ring_of(8) == 1);
  CHECK(grid.ring_of(9) == 2);
  CHECK(grid.ring_of(32) == 4);

  DiskGrid again(0.8, 4, 8);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i] == again.points()[i]);
  }
}

TEST_CASE("grid: parameter validation") {
  CHECK_THROWS_AS(DiskGrid(0.0, 4, 8), walpha::parameter_error);
  CHECK_THROWS_AS(DiskGrid(1.0, 4, 8), walpha::parameter_error);
  CHECK_THROWS_AS(DiskGrid(0.5, 1, 8), walpha::parameter_error);
  CHECK_THROWS_AS(DiskGrid(0.5, 4, 7), walpha::parameter_error);
}

TEST_CASE("w_margin: identity series is constantly 1") {
  DiskGrid grid = DiskGrid::defaults();
  for (double alpha : {0.0, 1.0, 2.0}) {
    walpha::MarginReport rep =
        walpha::w_margin(make({{0, 0}, {1, 0}}), AlphaParam(alpha), grid);
    CHECK(rep.min_value == 1.0);
    // Constant quantity: the tie is broken by the first point.
    CHECK(rep.argmin == Complex(0, 0));
  }
}

TEST_CASE("w_margin: quadratic with known boundary minimum") {
  DiskGrid grid = DiskGrid::defaults();
  walpha::MarginReport rep =
      walpha::w_margin(make({{0, 0}, {1, 0}, {0.5, 0}}), AlphaParam(1.0), grid);
  CHECK(std::abs(rep.min_value - (1.0 - 2.0 * 0.999)) <= 1e-12);
  CHECK(std::abs(rep.argmin - Complex(-0.999, 0.0)) <= 1e-12);
}

TEST_CASE("w_margin: logarithmic member stays positive") {
  // The sharp family's test-operator coefficients do not decay, so an
  // order-64 truncation is only trustworthy where the tail sum is small.
  walpha::MarginReport rep = walpha::w_margin(
      walpha::sharp_sum(1.0, 64).h(), AlphaParam(1.0), DiskGrid(0.9, 32, 360));
  CHECK(rep.min_value > 0.0);
}

TEST_CASE("w_margin: rejects unnormalized series") {
  DiskGrid grid(0.5, 2, 8);
  CHECK_THROWS_AS(
      walpha::w_margin(make({{0.5, 0}, {1, 0}}), AlphaParam(1.0), grid),
      walpha::parameter_error);
  CHECK_THROWS_AS(
      walpha::w_margin(make({{0, 0}, {2, 0}}), AlphaParam(1.0), grid),
      walpha::parameter_error);
}

TEST_CASE("wh0_margin: identity map") {
  walpha::MarginReport rep = walpha::wh0_margin(
      HarmonicMap::identity(), AlphaParam(1.0), DiskGrid::defaults());
  CHECK(rep.min_value == 1.0);
  CHECK(rep.argmin == Complex(0, 0));
}

TEST_CASE("wh0_margin: conjugate quadratic refuted at the boundary") {
  HarmonicMap f(make({{0, 0}, {1, 0}}), make({{0, 0}, {0, 0}, {0.5, 0}}));
  walpha::MarginReport rep =
      walpha::wh0_margin(f, AlphaParam(1.0), DiskGrid::defaults());
  CHECK(std::abs(rep.min_value - (1.0 - 2.0 * 0.999)) <= 1e-12);
  CHECK(std::abs(std::abs(rep.argmin) - 0.999) <= 1e-12);
}

TEST_CASE("wh0_margin: sharp single-coefficient member has margin 1 - r") {
  walpha::MarginReport rep = walpha::wh0_margin(
      walpha::sharp_single(1.0, 2), AlphaParam(1.0), DiskGrid::defaults());
  CHECK(std::abs(rep.min_value - (1.0 - 0.999)) <= 1e-12);
}

TEST_CASE("wh0_margin: refutation witness re-evaluates independently") {
  HarmonicMap f(make({{0, 0}, {1, 0}}), make({{0, 0}, {0, 0}, {0.5, 0}}));
  walpha::MarginReport rep =
      walpha::wh0_margin(f, AlphaParam(1.0), DiskGrid::defaults());
  REQUIRE(rep.min_value < -1e-6);
  double independent = direct_margin(f, 1.0, rep.argmin);
  CHECK(independent < -1e-6);
  CHECK(std::abs(independent - rep.min_value) <= 1e-9);
}

TEST_CASE("wh0_margin: shrinking the region cannot lower the minimum") {
  HarmonicMap f = walpha::harmonic_koebe(16);
  walpha::MarginReport wide =
      walpha::wh0_margin(f, AlphaParam(1.0), DiskGrid(0.999, 32, 180));
  walpha::MarginReport narrow =
      walpha::wh0_margin(f, AlphaParam(1.0), DiskGrid(0.8, 32, 180));
  CHECK(narrow.min_value >= wide.min_value);

  HarmonicMap member = walpha::random_member(1.0, 16, 77, 0.5);
  walpha::MarginReport wide2 =
      walpha::wh0_margin(member, AlphaParam(1.0), DiskGrid(0.999, 32, 180));
  walpha::MarginReport narrow2 =
      walpha::wh0_margin(member, AlphaParam(1.0), DiskGrid(0.8, 32, 180));
  CHECK(narrow2.min_value >= wide2.min_value);
}

TEST_CASE("wh0_margin: membership survives lowering alpha") {
  // Members for one parameter stay members for every smaller one.
  DiskGrid grid = DiskGrid::defaults();
  for (int i = 0; i < 50; ++i) {
    HarmonicMap f =
        walpha::random_member(2.0, 16, 9000 + static_cast<std::uint64_t>(i), 0.4);
    for (double beta : {0.0, 0.5, 1.0}) {
      CHECK(walpha::wh0_margin(f, AlphaParam(beta), grid).min_value > 0.0);
    }
  }
}

TEST_CASE("epsilon_min_margin: reduces to the analytic margin when g = 0") {
  HarmonicMap f = walpha::sharp_sum(1.0, 16);
  DiskGrid grid(0.999, 16, 90);
  walpha::EpsilonSample eps(24);
  walpha::MarginReport slice_min =
      walpha::epsilon_min_margin(f, AlphaParam(1.0), grid, eps);
  walpha::MarginReport direct = walpha::w_margin(f.h(), AlphaParam(1.0), grid);
  CHECK(slice_min.min_value == direct.min_value);
}

TEST_CASE("epsilon_min_margin: dominates the harmonic margin within the gap bound") {
  DiskGrid grid(0.999, 16, 90);
  walpha::EpsilonSample eps(360);
  for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
    HarmonicMap f = walpha::random_member(1.0, 16, seed, 0.5);
    double sampled =
        walpha::epsilon_min_margin(f, AlphaParam(1.0), grid, eps).min_value;
    double continuum = walpha::wh0_margin(f, AlphaParam(1.0), grid).min_value;
    CHECK(sampled >= continuum - 1e-12);

    AnalyticSeries tg = walpha::test_operator(f.g(), 1.0);
    double max_b = 0.0;
    for (Complex z : grid.points()) {
      max_b = std::max(max_b, std::abs(walpha::evaluate(tg, z)));
    }
    double gap_bound = max_b * (1.0 - std::cos(3.141592653589793 / 360.0));
    CHECK(sampled - continuum <= gap_bound + 1e-12);
  }
}

TEST_CASE("epsilon_min_margin: sharp member gap bound with unit tg scale") {
  DiskGrid grid = DiskGrid::defaults();
  walpha::EpsilonSample eps(360);
  HarmonicMap f = walpha::sharp_single(1.0, 2);
  double sampled =
      walpha::epsilon_min_margin(f, AlphaParam(1.0), grid, eps).min_value;
  double continuum = walpha::wh0_margin(f, AlphaParam(1.0), grid).min_value;
  CHECK(sampled >= continuum - 1e-12);
  CHECK(sampled - continuum <= 2.0 * (1.0 - std::cos(3.141592653589793 / 360.0)));
}

TEST_CASE("sufficient_condition_sum: identity map sums to zero") {
  CHECK(walpha::sufficient_condition_sum(HarmonicMap::identity(),
                                         AlphaParam(1.0)) == 0.0);
}

TEST_CASE("sufficient_condition_sum: hand sum certifies and grid agrees") {
  HarmonicMap f(make({{0, 0}, {1, 0}}), make({{0, 0}, {0, 0}, {0.2, 0}}));
  double s = walpha::sufficient_condition_sum(f, AlphaParam(1.0));
  CHECK(s == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(s < 1.0);
  CHECK(walpha::wh0_margin(f, AlphaParam(1.0), DiskGrid::defaults()).min_value >
        0.0);
}

TEST_CASE("sufficient_condition_sum: strictly sufficient, not necessary") {
  // Each term of the sharp family contributes exactly 2, so the sum blows
  // up with the order while the grid margin stays positive.
  HarmonicMap f = walpha::sharp_sum(1.0, 32);
  double s = walpha::sufficient_condition_sum(f, AlphaParam(1.0));
  CHECK(s >= 2.0 * (32 - 1));
  // Truncation tails dominate near the boundary, so the positivity scan
  // stays at a radius the order-32 tail cannot flip.
  CHECK(walpha::wh0_margin(f, AlphaParam(1.0), DiskGrid(0.9, 32, 360)).min_value >
        0.0);
}

TEST_CASE("sufficient sum below 1 implies nonnegative grid margin") {
  DiskGrid grid = DiskGrid::defaults();
  for (std::uint64_t seed : {21ull, 22ull, 23ull, 24ull}) {
    HarmonicMap f = walpha::random_member(0.5, 16, seed, 0.25);
    CHECK(walpha::sufficient_condition_sum(f, AlphaParam(0.5)) < 1.0);
    CHECK(walpha::wh0_margin(f, AlphaParam(0.5), grid).min_value > -1e-9);
  }
}

TEST_CASE("halfplane_margin: identity series sits at one half") {
  walpha::MarginReport rep =
      walpha::halfplane_margin(make({{0, 0}, {1, 0}}), DiskGrid::defaults());
  CHECK(rep.min_value == 0.5);
}

TEST_CASE("halfplane_margin: quadratic minimized on the negative axis") {
  walpha::MarginReport rep = walpha::halfplane_margin(
      make({{0, 0}, {1, 0}, {0.5, 0}}), DiskGrid::defaults());
  CHECK(std::abs(rep.min_value - (0.5 - 0.5 * 0.999)) <= 1e-12);
}

TEST_CASE("halfplane_margin: slices of members satisfy the half-plane bound") {
  DiskGrid grid(0.999, 16, 90);
  walpha::EpsilonSample eps(8);
  for (std::uint64_t seed : {31ull, 32ull, 33ull, 34ull, 35ull}) {
    HarmonicMap f = walpha::random_member(1.0, 16, seed, 0.5);
    for (Complex e : eps.values()) {
      walpha::MarginReport rep =
          walpha::halfplane_margin(walpha::slice(f, e), grid);
      CHECK(rep.min_value > -1e-9);
    }
  }
}

TEST_CASE("halfplane_margin: rejects a nonzero constant term") {
  CHECK_THROWS_AS(
      walpha::halfplane_margin(make({{0.1, 0}, {1, 0}}), DiskGrid(0.5, 2, 8)),
      walpha::parameter_error);
}

TEST_CASE("sense_preserving_margin: identity map") {
  walpha::MarginReport rep = walpha::sense_preserving_margin(
      HarmonicMap::identity(), DiskGrid::defaults());
  CHECK(rep.min_value == 1.0);
}

TEST_CASE("sense_preserving_margin: closed form for one conjugate term") {
  HarmonicMap f(make({{0, 0}, {1, 0}}), make({{0, 0}, {0, 0}, {0.25, 0}}));
  walpha::MarginReport rep =
      walpha::sense_preserving_margin(f, DiskGrid::defaults());
  CHECK(std::abs(rep.min_value - (1.0 - 0.999 * 0.999 / 4.0)) <= 1e-12);
}

TEST_CASE("sense_preserving_margin: members are sense preserving") {
  DiskGrid grid = DiskGrid::defaults();
  for (std::uint64_t seed : {41ull, 42ull, 43ull}) {
    HarmonicMap f = walpha::random_member(1.0, 16, seed, 0.5);
    REQUIRE(walpha::wh0_margin(f, AlphaParam(1.0), grid).min_value > 0.0);
    CHECK(walpha::sense_preserving_margin(f, grid).min_value > 0.0);
  }
}

TEST_CASE("starlike_margin: identity map") {
  walpha::MarginReport rep =
      walpha::starlike_margin(HarmonicMap::identity(), DiskGrid::defaults());
  CHECK(rep.min_value == 1.0);
}

TEST_CASE("starlike_margin: analytic Koebe function is starlike") {
  // Order 256 keeps the truncation tail negligible at radius 0.9; the
  // minimum converges to (1 - 0.9)/(1 + 0.9) on the negative axis.
  HarmonicMap f(walpha::analytic_koebe(256), AnalyticSeries::zero());
  walpha::MarginReport rep =
      walpha::starlike_margin(f, DiskGrid(0.9, 32, 360));
  CHECK(rep.min_value > 0.0);
  CHECK(std::abs(rep.min_value - 0.1 / 1.9) < 1e-3);
}

TEST_CASE("starlike_margin: logarithmic member is starlike") {
  walpha::MarginReport rep = walpha::starlike_margin(
      walpha::sharp_sum(1.0, 64), DiskGrid(0.99, 32, 360));
  CHECK(rep.min_value > 0.0);
}

TEST_CASE("starlike_margin: names a grid point where the map vanishes") {
  // h(z) = z - 2z^2 vanishes at z = 1/2, which this grid hits exactly.
  HarmonicMap f(make({{0, 0}, {1, 0}, {-2, 0}}), AnalyticSeries::zero());
  CHECK_THROWS_AS(walpha::starlike_margin(f, DiskGrid(0.5, 2, 8)),
                  walpha::degenerate_point_error);
}
