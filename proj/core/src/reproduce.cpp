#include "walpha/reproduce.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "walpha/bounds.hpp"
#include "walpha/commands.hpp"
#include "walpha/convolution.hpp"
#include "walpha/errors.hpp"
#include "walpha/extremals.hpp"
#include "walpha/margins.hpp"
#include "walpha/radii.hpp"
#include "walpha/rng.hpp"
#include "walpha/version.hpp"

namespace walpha {

namespace {

using ordered_json = nlohmann::ordered_json;

// Frozen reference values, computed ahead of time at high precision.
constexpr double kQuinticRoot = 0.433797336361689612;
constexpr double kGoldenRadius = 0.3819660112501051518;
constexpr double kUpperEnvelopeAtHalf = 0.66448105293002501;

constexpr int kOrder = 64;
constexpr int kEpsCount = 360;
constexpr double kSlack = 0.5;

std::string fmt(double v, const char* spec = "%.8g") {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), spec, v);
  return buffer;
}

std::string fmt_exact(double v) { return fmt(v, "%.17g"); }

struct Entry {
  CriterionResult result;
  ordered_json details;
};

struct SuiteRun {
  std::vector<Entry> entries;
  ordered_json koebe_table;
  ordered_json section_table;
};

constexpr double kMemberAlphas[4] = {0.0, 0.5, 1.0, 2.0};

template <typename Body>
Entry timed(int id, std::string name, Body&& body) {
  Entry entry;
  entry.result.id = id;
  entry.result.name = std::move(name);
  auto start = std::chrono::steady_clock::now();
  body(entry);
  entry.result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return entry;
}

Entry criterion_quintic() {
  return timed(1, "quintic radius", [](Entry& e) {
    RadiusResult r = quintic_radius(1e-9);
    bool near_root = std::abs(r.value - 0.433797) <= 1e-6;
    bool residual_ok = r.residual < 1e-9;
    e.result.pass = near_root && residual_ok;
    e.result.summary = "value=" + fmt(r.value, "%.9g") +
                       " residual=" + fmt(r.residual) +
                       " iterations=" + std::to_string(r.iterations);
    e.details["value"] = r.value;
    e.details["residual"] = r.residual;
    e.details["iterations"] = r.iterations;
    e.details["bracket"] = {r.lo, r.hi};
  });
}

Entry criterion_golden() {
  return timed(2, "golden radius", [](Entry& e) {
    double g = golden_radius();
    double identity_residual = std::abs(2.0 * g + g * g / (1.0 - g) - 1.0);
    bool near = std::abs(g - kGoldenRadius) <= 1e-9;
    bool identity_ok = identity_residual <= 1e-12;
    e.result.pass = near && identity_ok;
    e.result.summary = "value=" + fmt(g, "%.10g") +
                       " identity_residual=" + fmt(identity_residual);
    e.details["value"] = g;
    e.details["identity_residual"] = identity_residual;
  });
}

Entry criterion_sharp_single(const DiskGrid& grid) {
  return timed(3, "sharp single coefficients and margins", [&](Entry& e) {
    double worst_coeff = 0.0;
    double worst_margin = 0.0;
    bool pass = true;
    for (double alpha : kMemberAlphas) {
      for (int n = 2; n <= 10; ++n) {
        HarmonicMap f = sharp_single(alpha, n);
        auto [single, combined] = coefficient_bound(alpha, n);
        (void)combined;
        double bn = std::abs(f.g().coeff(n));
        double coeff_dev = std::abs(bn - single);
        pass = pass && coeff_dev <= 1e-15 * single;
        worst_coeff = std::max(worst_coeff, coeff_dev / single);

        double margin = wh0_margin(f, AlphaParam{alpha}, grid).min_value;
        double expected =
            1.0 - std::pow(grid.spec().r_max, static_cast<double>(n - 1));
        double margin_dev = std::abs(margin - expected);
        pass = pass && margin_dev <= 1e-6;
        worst_margin = std::max(worst_margin, margin_dev);
      }
    }
    e.result.pass = pass;
    e.result.summary = "worst_coeff_rel=" + fmt(worst_coeff) +
                       " worst_margin_dev=" + fmt(worst_margin);
    e.details["worst_coeff_rel"] = worst_coeff;
    e.details["worst_margin_dev"] = worst_margin;
  });
}

Entry criterion_koebe_coefficients(ordered_json& koebe_table) {
  return timed(4, "harmonic Koebe coefficients", [&](Entry& e) {
    HarmonicMap koebe = harmonic_koebe(20);
    // Expansion of (1-z)^{-3} for the rational-form oracle.
    auto d = [](int k) {
      if (k < 0) return 0.0;
      return (k + 1.0) * (k + 2.0) / 2.0;
    };
    double worst = 0.0;
    bool pass = true;
    koebe_table = ordered_json::array();
    for (int n = 1; n <= 20; ++n) {
      double a_oracle = d(n - 1) - 0.5 * d(n - 2) + d(n - 3) / 6.0;
      double b_oracle = 0.5 * d(n - 2) + d(n - 3) / 6.0;
      auto [an, bn] = conjectured_bounds(n);
      double b_closed = n == 1 ? 0.0 : bn;
      double dev = std::max(std::abs(koebe.h().coeff(n).real() - a_oracle),
                            std::abs(koebe.g().coeff(n).real() - b_oracle));
      dev = std::max(dev, std::abs(an - a_oracle));
      if (n >= 2) dev = std::max(dev, std::abs(bn - b_oracle));
      worst = std::max(worst, dev);
      pass = pass && dev <= 1e-9;
      koebe_table.push_back({n, an, b_closed});
    }
    pass = pass && koebe.h().coeff(2).real() == 2.5 &&
           koebe.g().coeff(2).real() == 0.5;
    e.result.pass = pass;
    e.result.summary = "worst_dev=" + fmt(worst) + " a2=" +
                       fmt_exact(koebe.h().coeff(2).real()) + " b2=" +
                       fmt_exact(koebe.g().coeff(2).real());
    e.details["worst_dev"] = worst;
  });
}

Entry criterion_epsilon_reduction(const DiskGrid& grid, std::uint64_t seed_base) {
  return timed(5, "slice sampling gap bound", [&](Entry& e) {
    EpsilonSample eps{kEpsCount};
    double gap_bound_factor = 1.0 - std::cos(std::numbers::pi / kEpsCount);
    double min_gap = 0.0;
    double worst_excess = -1.0;
    bool pass = true;
    for (int i = 0; i < 50; ++i) {
      double alpha = kMemberAlphas[i % 4];
      HarmonicMap f =
          random_member(alpha, kOrder, seed_base + 1000 + i, kSlack);
      double w = wh0_margin(f, AlphaParam{alpha}, grid).min_value;
      double em =
          epsilon_min_margin(f, AlphaParam{alpha}, grid, eps).min_value;
      AnalyticSeries tg = test_operator(f.g(), alpha);
      double max_b = 0.0;
      for (Complex z : grid.points()) {
        max_b = std::max(max_b, std::abs(evaluate(tg, z)));
      }
      double gap = em - w;
      double bound = max_b * gap_bound_factor;
      pass = pass && gap >= 0.0 && gap <= bound;
      if (i == 0 || gap < min_gap) min_gap = gap;
      worst_excess = std::max(worst_excess, gap - bound);
    }
    e.result.pass = pass;
    e.result.summary =
        "min_gap=" + fmt(min_gap) + " worst_excess=" + fmt(worst_excess);
    e.details["min_gap"] = min_gap;
    e.details["worst_excess_over_bound"] = worst_excess;
  });
}

Entry criterion_convolution(const DiskGrid& grid, std::uint64_t seed_base) {
  return timed(6, "convolution closure", [&](Entry& e) {
    AlphaParam one{1.0};
    double worst = 1.0;
    bool pass = true;
    for (int j = 0; j < 100; ++j) {
      HarmonicMap f1 =
          random_member(1.0, kOrder, seed_base + 2000 + 2 * j, kSlack);
      HarmonicMap f2 =
          random_member(1.0, kOrder, seed_base + 2000 + 2 * j + 1, kSlack);
      double m = wh0_margin(harmonic_convolve(f1, f2), one, grid).min_value;
      worst = std::min(worst, m);
      pass = pass && m > -1e-9;
    }

    std::vector<HarmonicMap> members;
    for (int k = 0; k < 10; ++k) {
      members.push_back(
          random_member(1.0, kOrder, seed_base + 2100 + k, kSlack));
    }
    SplitMix64 rng(seed_base + 2200);
    std::vector<double> weights(10);
    double total = 0.0;
    for (double& w : weights) {
      w = rng.next_double();
      total += w;
    }
    for (double& w : weights) w /= total;
    double convex_margin =
        wh0_margin(convex_combination(weights, members), one, grid).min_value;
    pass = pass && convex_margin > -1e-9;

    // Truncated z/(1-z); the order is taken large enough that the
    // half-plane hypothesis survives truncation on the outermost ring.
    std::vector<Complex> ones(8193, Complex{1.0, 0.0});
    ones[0] = Complex{0.0, 0.0};
    AnalyticSeries phi{std::move(ones)};
    double phi_margin = halfplane_margin(phi, grid).min_value;
    pass = pass && phi_margin > 0.0;
    double worst_tilde = 1.0;
    for (int k = 0; k < 10; ++k) {
      double m = wh0_margin(tilde_convolve(members[static_cast<std::size_t>(k)],
                                           phi),
                            one, grid)
                     .min_value;
      worst_tilde = std::min(worst_tilde, m);
      pass = pass && m > -1e-9;
    }

    e.result.pass = pass;
    e.result.summary = "worst_pair_margin=" + fmt(worst) +
                       " convex_margin=" + fmt(convex_margin) +
                       " phi_margin=" + fmt(phi_margin) +
                       " worst_tilde_margin=" + fmt(worst_tilde);
    e.details["worst_pair_margin"] = worst;
    e.details["convex_margin"] = convex_margin;
    e.details["phi_halfplane_margin"] = phi_margin;
    e.details["worst_tilde_margin"] = worst_tilde;
  });
}

Entry criterion_halfplane(const DiskGrid& grid, std::uint64_t seed_base) {
  return timed(7, "slice half-plane image", [&](Entry& e) {
    EpsilonSample eps{8};
    double worst = 1.0;
    bool pass = true;
    for (int i = 0; i < 50; ++i) {
      double alpha = kMemberAlphas[i % 4];
      HarmonicMap f =
          random_member(alpha, kOrder, seed_base + 3000 + i, kSlack);
      for (Complex direction : eps.values()) {
        double m = halfplane_margin(slice(f, direction), grid).min_value;
        worst = std::min(worst, m);
        pass = pass && m > -1e-9;
      }
    }
    e.result.pass = pass;
    e.result.summary = "worst_margin=" + fmt(worst);
    e.details["worst_margin"] = worst;
  });
}

Entry criterion_convex_null() {
  return timed(8, "convex null sequence threshold", [](Entry& e) {
    bool pass = true;
    ordered_json rows = ordered_json::array();
    for (double alpha : {0.0, 0.25, 0.5, 1.0, 2.0}) {
      ConvexNullReport report = convex_null_check(alpha, 50);
      bool threshold = 6.0 * alpha * alpha - alpha - 1.0 >= 0.0;
      bool ok = report.pass == threshold;
      if (!threshold) {
        ok = ok && !report.pass && report.violation_index == 1;
      }
      pass = pass && ok;
      rows.push_back({{"alpha", alpha},
                      {"pass", report.pass},
                      {"violation_index", report.violation_index}});
    }
    e.result.pass = pass;
    e.result.summary = pass ? "threshold matched at alpha in {0,0.25,0.5,1,2}"
                            : "threshold mismatch";
    e.details["rows"] = std::move(rows);
  });
}

Entry criterion_growth(const DiskGrid& grid, std::uint64_t seed_base) {
  return timed(9, "growth envelope", [&](Entry& e) {
    GrowthEnvelope env = growth_envelope(1.0, 0.5, kOrder);
    double upper_dev = std::abs(env.upper - kUpperEnvelopeAtHalf);
    bool pass = upper_dev <= env.tail_bound + 1e-6;

    constexpr double kGrowthAlphas[4] = {0.25, 0.5, 0.75, 1.0};
    for (int i = 0; i < 50; ++i) {
      double alpha = kGrowthAlphas[i % 4];
      HarmonicMap f =
          random_member(alpha, kOrder, seed_base + 4000 + i, kSlack);
      pass = pass && verify_growth(f, AlphaParam{alpha}, grid, kOrder).all_inside;
    }

    HarmonicMap sharp = sharp_sum(1.0, kOrder);
    pass = pass && verify_growth(sharp, AlphaParam{1.0}, grid, kOrder).all_inside;
    double worst_touch = 0.0;
    for (double r : grid.ring_radii()) {
      GrowthEnvelope ring = growth_envelope(1.0, r, kOrder);
      double modulus = std::abs(evaluate_harmonic(sharp, Complex{r, 0.0}));
      double touch = std::abs(ring.upper - modulus);
      worst_touch = std::max(worst_touch, touch - ring.tail_bound);
      pass = pass && touch <= ring.tail_bound + 1e-9;
    }

    e.result.pass = pass;
    e.result.summary = "upper_dev=" + fmt(upper_dev) +
                       " tail=" + fmt(env.tail_bound) +
                       " worst_touch_excess=" + fmt(worst_touch);
    e.details["upper_at_half"] = env.upper;
    e.details["upper_dev"] = upper_dev;
    e.details["tail_bound"] = env.tail_bound;
    e.details["worst_touch_excess"] = worst_touch;
  });
}

Entry criterion_cubic_sections(std::uint64_t seed_base) {
  return timed(10, "cubic section lower bound", [&](Entry& e) {
    DiskGrid half{0.5, 64, 720};
    EpsilonSample eps{kEpsCount};
    double worst = 1.0;
    bool pass = true;
    for (int i = 0; i < 50; ++i) {
      double alpha = kMemberAlphas[i % 4];
      HarmonicMap f =
          random_member(alpha, kOrder, seed_base + 5000 + i, kSlack);
      double m = cubic_section_min(f, AlphaParam{alpha}, eps, half);
      worst = std::min(worst, m);
      pass = pass && m >= 0.25 - 1e-9;
    }

    DiskGrid refined{0.5, 8, 2880};
    double sharp_min =
        cubic_section_min(sharp_sum(1.0, kOrder), AlphaParam{1.0}, eps, refined);
    pass = pass && std::abs(sharp_min - 0.25) <= 5e-4;

    e.result.pass = pass;
    e.result.summary =
        "worst_min=" + fmt(worst) + " sharp_min=" + fmt(sharp_min, "%.10g");
    e.details["worst_min"] = worst;
    e.details["sharp_min"] = sharp_min;
  });
}

Entry criterion_section_radii(const DiskGrid& grid, std::uint64_t seed_base,
                              ordered_json& section_table) {
  return timed(11, "section radii", [&](Entry& e) {
    struct Member {
      std::string label;
      double alpha;
      HarmonicMap map;
    };
    std::vector<Member> members;
    members.push_back({"sharp_sum", 1.0, sharp_sum(1.0, kOrder)});
    members.push_back({"sharp_single", 1.0, sharp_single(1.0, 2)});
    for (int i = 0; i < 20; ++i) {
      double alpha = kMemberAlphas[i % 4];
      members.push_back(
          {"random_" + std::to_string(i), alpha,
           random_member(alpha, kOrder, seed_base + 6000 + i, kSlack)});
    }

    constexpr std::pair<int, int> kPairs[12] = {
        {1, 5}, {3, 5}, {4, 7}, {2, 2}, {3, 3}, {5, 3},
        {4, 3}, {3, 2}, {2, 5}, {2, 9}, {5, 2}, {8, 2}};

    section_table = ordered_json::array();
    double worst_slack = 1.0;
    bool pass = true;
    for (const Member& member : members) {
      for (auto [p, q] : kPairs) {
        CaseRadius guaranteed = case_radius(p, q);
        RadiusResult empirical = section_radius(
            member.map, AlphaParam{member.alpha}, p, q, grid, 5e-4);
        double slack_here = empirical.value - *guaranteed.radius;
        worst_slack = std::min(worst_slack, slack_here);
        pass = pass && slack_here >= -2e-3;
        section_table.push_back({{"family", member.label},
                                 {"alpha", member.alpha},
                                 {"p", p},
                                 {"q", q},
                                 {"case", to_string(guaranteed.tag)},
                                 {"guaranteed", *guaranteed.radius},
                                 {"empirical", empirical.value}});
      }
    }
    e.result.pass = pass;
    e.result.summary = "worst_slack=" + fmt(worst_slack) + " over " +
                       std::to_string(members.size()) + " members x 12 pairs";
    e.details["worst_slack"] = worst_slack;
  });
}

Entry criterion_koebe_refuted(const DiskGrid& grid) {
  return timed(12, "harmonic Koebe refuted", [&](Entry& e) {
    FunctionSpec spec;
    spec.family = FamilySpec{FamilyName::harmonic_koebe, std::nullopt,
                             std::nullopt, kOrder, std::nullopt, std::nullopt};
    CommandOutcome outcome = cmd_check(spec, 1.0, Defaults{});
    double margin =
        wh0_margin(harmonic_koebe(kOrder), AlphaParam{1.0}, grid).min_value;
    e.result.pass = outcome.exit_code == 2 && margin < -1e-6;
    e.result.summary = "exit_code=" + std::to_string(outcome.exit_code) +
                       " margin=" + fmt(margin);
    e.details["exit_code"] = outcome.exit_code;
    e.details["margin"] = margin;
  });
}

SuiteRun run_suite(std::uint64_t seed_base) {
  SuiteRun run;
  DiskGrid grid = DiskGrid::defaults();
  run.entries.push_back(criterion_quintic());
  run.entries.push_back(criterion_golden());
  run.entries.push_back(criterion_sharp_single(grid));
  run.entries.push_back(criterion_koebe_coefficients(run.koebe_table));
  run.entries.push_back(criterion_epsilon_reduction(grid, seed_base));
  run.entries.push_back(criterion_convolution(grid, seed_base));
  run.entries.push_back(criterion_halfplane(grid, seed_base));
  run.entries.push_back(criterion_convex_null());
  run.entries.push_back(criterion_growth(grid, seed_base));
  run.entries.push_back(criterion_cubic_sections(seed_base));
  run.entries.push_back(criterion_section_radii(grid, seed_base, run.section_table));
  run.entries.push_back(criterion_koebe_refuted(grid));
  return run;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw error("cannot open '" + path.string() + "' for writing");
  }
  out << content;
  if (!out) {
    throw error("failed writing '" + path.string() + "'");
  }
}

}  // namespace

std::vector<CriterionResult> run_criteria(std::uint64_t seed_base) {
  SuiteRun run = run_suite(seed_base);
  std::vector<CriterionResult> results;
  results.reserve(run.entries.size());
  for (Entry& entry : run.entries) {
    results.push_back(std::move(entry.result));
  }
  return results;
}

ReproduceOutcome run_reproduce(const std::filesystem::path& out_dir,
                               std::uint64_t seed_base) {
  std::filesystem::create_directories(out_dir);
  SuiteRun run = run_suite(seed_base);

  bool all_pass = true;
  ordered_json criteria = ordered_json::array();
  std::string criteria_csv = "id,name,pass\n";
  for (const Entry& entry : run.entries) {
    all_pass = all_pass && entry.result.pass;
    ordered_json c;
    c["id"] = entry.result.id;
    c["name"] = entry.result.name;
    c["pass"] = entry.result.pass;
    c["summary"] = entry.result.summary;
    c["details"] = entry.details;
    criteria.push_back(std::move(c));
    criteria_csv += std::to_string(entry.result.id) + "," + entry.result.name +
                    "," + (entry.result.pass ? "true" : "false") + "\n";
  }

  ordered_json bundle;
  bundle["version"] = kVersion;
  bundle["seed"] = seed_base;
  Defaults d;
  bundle["defaults"] = {{"order", d.order},
                        {"grid_radial", d.grid_radial},
                        {"grid_angular", d.grid_angular},
                        {"r_max", d.r_max},
                        {"eps_samples", d.eps_samples},
                        {"tol", d.tol}};
  bundle["criteria"] = std::move(criteria);
  bundle["tables"] = {{"koebe_coefficients", run.koebe_table},
                      {"section_radii", run.section_table}};
  bundle["all_pass"] = all_pass;

  write_file(out_dir / "bundle.json", bundle.dump(2) + "\n");
  write_file(out_dir / "criteria.csv", criteria_csv);

  std::string koebe_csv = "n,A_n,B_n\n";
  for (const auto& row : run.koebe_table) {
    koebe_csv += std::to_string(row[0].get<int>()) + "," +
                 fmt_exact(row[1].get<double>()) + "," +
                 fmt_exact(row[2].get<double>()) + "\n";
  }
  write_file(out_dir / "koebe_coefficients.csv", koebe_csv);

  std::string section_csv = "family,alpha,p,q,case,guaranteed,empirical\n";
  for (const auto& row : run.section_table) {
    section_csv += row["family"].get<std::string>() + "," +
                   fmt_exact(row["alpha"].get<double>()) + "," +
                   std::to_string(row["p"].get<int>()) + "," +
                   std::to_string(row["q"].get<int>()) + "," +
                   row["case"].get<std::string>() + "," +
                   fmt_exact(row["guaranteed"].get<double>()) + "," +
                   fmt_exact(row["empirical"].get<double>()) + "\n";
  }
  write_file(out_dir / "section_radii.csv", section_csv);

  ReproduceOutcome outcome;
  outcome.exit_code = all_pass ? 0 : 2;
  for (Entry& entry : run.entries) {
    outcome.criteria.push_back(std::move(entry.result));
  }
  return outcome;
}

}  // namespace walpha
