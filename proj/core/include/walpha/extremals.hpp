#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "walpha/harmonic.hpp"

namespace walpha {

// Reference functions. Every constructor is deterministic; random_member is
// reproducible bit for bit from its seed on any platform.

// Harmonic analogue of the Koebe function, truncated at degree order >= 3:
// a_n = (2n+1)(n+1)/6, b_n = (2n-1)(n-1)/6.
HarmonicMap harmonic_koebe(int order);

// z/(1-z)^2 truncated at degree order >= 1, as the h part of a map with g = 0.
AnalyticSeries analytic_koebe(int order);

// Member with a_n = 2/(alpha n^2 + (1-alpha) n) for 2 <= n <= order, g = 0.
// Its coefficient sum diverges logarithmically while every grid margin
// stays positive.
HarmonicMap sharp_sum(double alpha, int order);

// Member with h = z and a single g coefficient b_n = 1/(alpha n^2 +
// (1-alpha) n), n >= 2. Attains the coefficient bound with equality.
HarmonicMap sharp_single(double alpha, int n);

// Seeded member: coefficients a_n, b_n for 2 <= n <= order are drawn with
// magnitude uniform in [0, 1/n^2) and uniform phase, then rescaled by one
// common factor so the certifying coefficient sum equals 1 - slack.
// Requires slack in (0, 1).
HarmonicMap random_member(double alpha, int order, std::uint64_t seed,
                          double slack);

// Conjectured extremal coefficient pair (A_n, B_n) =
// ((2n+1)(n+1)/6, (2n-1)(n-1)/6) for n >= 1. Reference data only.
std::pair<double, double> conjectured_bounds(int n);

enum class FamilyName {
  harmonic_koebe,
  analytic_koebe,
  sharp_sum,
  sharp_single,
  random_member,
  identity,
};

const char* to_string(FamilyName name);
std::optional<FamilyName> family_from_string(const std::string& name);

// Declarative description of one reference function. A parameter must be
// present exactly when the named family uses it.
struct FamilySpec {
  FamilyName name = FamilyName::identity;
  std::optional<double> alpha;
  std::optional<int> n;
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
  std::optional<double> slack;
};

// Instantiates the family, rejecting missing or extraneous parameters.
HarmonicMap build_family(const FamilySpec& spec);

}  // namespace walpha
