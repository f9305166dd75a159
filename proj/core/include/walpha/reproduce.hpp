#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "walpha/defaults.hpp"

namespace walpha {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;  // measured wall time; never serialized
  std::string summary;
};

// Runs the pinned verification suite. The content depends only on
// seed_base, so runs with equal seeds produce identical results.
std::vector<CriterionResult> run_criteria(
    std::uint64_t seed_base = Defaults{}.seed);

struct ReproduceOutcome {
  int exit_code = 0;  // 0 all criteria passed, 2 otherwise
  std::vector<CriterionResult> criteria;
};

// Runs the suite and writes bundle.json, criteria.csv,
// koebe_coefficients.csv and section_radii.csv into out_dir. Reruns with
// the same seed write byte-identical files.
ReproduceOutcome run_reproduce(const std::filesystem::path& out_dir,
                               std::uint64_t seed_base = Defaults{}.seed);

}  // namespace walpha
