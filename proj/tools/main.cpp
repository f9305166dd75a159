// walpha: numerical verification of harmonic mappings in the class
// defined by Re T[h] > |T[g]| with T[F] = F' + alpha z F''.
//
// Subcommands take a function description file (JSON) and emit a JSON
// report on stdout or to --out. Exit codes: 0 nothing refuted, 2 a
// mathematical refutation was found, 1 usage or input errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "walpha/commands.hpp"
#include "walpha/defaults.hpp"
#include "walpha/errors.hpp"
#include "walpha/report.hpp"
#include "walpha/reproduce.hpp"
#include "walpha/version.hpp"

namespace {

std::string read_input_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw walpha::error("cannot open input file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text,
                  const std::optional<std::string>& out_path) {
  if (!out_path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*out_path, std::ios::binary);
  if (!out) {
    throw walpha::error("cannot open output file: " + *out_path);
  }
  out << text;
  if (!out) {
    throw walpha::error("write failed: " + *out_path);
  }
}

// Shared flag state. Every numeric default can also come from the
// environment (WALPHA_* names); explicit flags win over both.
struct Options {
  walpha::Defaults defaults;
  std::optional<double> alpha;
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  std::string spec_path;
  std::string second_spec_path;
  bool tilde = false;
  bool out_of_hypothesis = false;
  std::optional<std::string> csv_path;
  int section_p = 1;
  int section_q = 1;
  double boundary_r = 0.5;
};

void add_grid_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--grid-radial", opt.defaults.grid_radial,
                  "radial rings of the sampling grid")
      ->envname("WALPHA_GRID_RADIAL")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--grid-angular", opt.defaults.grid_angular,
                  "angular samples per ring")
      ->envname("WALPHA_GRID_ANGULAR")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rmax", opt.defaults.r_max, "outermost sampling radius")
      ->envname("WALPHA_RMAX");
}

void add_alpha_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("--alpha", opt.alpha,
                  "class parameter; overrides the description's value")
      ->envname("WALPHA_ALPHA");
}

void add_order_seed_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--order", opt.order,
                  "truncation order override for family descriptions")
      ->envname("WALPHA_ORDER")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed,
                  "seed override for generated families")
      ->envname("WALPHA_SEED");
}

void add_out_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out", opt.out_path, "write the report here instead of stdout");
}

walpha::FunctionSpec load_spec(const Options& opt, const std::string& path) {
  walpha::FunctionSpec spec = walpha::parse_function_spec(read_input_file(path));
  walpha::SpecOverrides overrides;
  overrides.alpha = opt.alpha;
  overrides.order = opt.order;
  overrides.seed = opt.seed;
  return walpha::apply_overrides(spec, overrides);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification toolkit for a class of harmonic mappings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("walpha ") + walpha::kVersion);

  Options opt;

  app.add_option("--eps-samples", opt.defaults.eps_samples,
                 "number of unimodular slice directions")
      ->envname("WALPHA_EPS_SAMPLES")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.defaults.tol, "root finding tolerance")
      ->envname("WALPHA_TOL")
      ->check(CLI::PositiveNumber);

  CLI::App* check = app.add_subcommand(
      "check", "verify class membership of one function description");
  check->add_option("spec", opt.spec_path, "function description file, - for stdin")
      ->required();
  add_alpha_flag(check, opt);
  add_order_seed_flags(check, opt);
  add_grid_flags(check, opt);
  add_out_flag(check, opt);

  CLI::App* bounds = app.add_subcommand(
      "bounds", "check coefficient inequalities degree by degree");
  bounds->add_option("spec", opt.spec_path, "function description file, - for stdin")
      ->required();
  add_alpha_flag(bounds, opt);
  add_order_seed_flags(bounds, opt);
  add_out_flag(bounds, opt);

  CLI::App* growth = app.add_subcommand(
      "growth", "check the radial modulus envelope ring by ring");
  growth->add_option("spec", opt.spec_path, "function description file, - for stdin")
      ->required();
  add_alpha_flag(growth, opt);
  add_order_seed_flags(growth, opt);
  add_grid_flags(growth, opt);
  growth->add_flag("--out-of-hypothesis", opt.out_of_hypothesis,
                   "evaluate the envelope even when alpha is outside (0,1]");
  growth->add_option("--csv", opt.csv_path, "also write the envelope curve as CSV");
  add_out_flag(growth, opt);

  CLI::App* convolve = app.add_subcommand(
      "convolve", "convolve two descriptions and check the product's margin");
  convolve->add_option("first", opt.spec_path, "first function description file")
      ->required();
  convolve->add_option("second", opt.second_spec_path,
                       "second function description file")
      ->required();
  add_alpha_flag(convolve, opt);
  add_order_seed_flags(convolve, opt);
  add_grid_flags(convolve, opt);
  convolve->add_flag("--tilde", opt.tilde,
                     "convolve both parts with the second description's analytic part");
  add_out_flag(convolve, opt);

  CLI::App* sections = app.add_subcommand(
      "sections", "classify a truncation pair and compare its radii");
  sections->add_option("spec", opt.spec_path, "function description file, - for stdin")
      ->required();
  sections->add_option("-p", opt.section_p, "truncation degree of the analytic part")
      ->required()
      ->check(CLI::PositiveNumber);
  sections->add_option("-q", opt.section_q, "truncation degree of the co-analytic part")
      ->required()
      ->check(CLI::PositiveNumber);
  add_alpha_flag(sections, opt);
  add_order_seed_flags(sections, opt);
  add_grid_flags(sections, opt);
  add_out_flag(sections, opt);

  CLI::App* radius = app.add_subcommand(
      "radius", "report the closed-form and root-found radii");
  add_out_flag(radius, opt);

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "run the pinned verification suite and write the bundle");
  reproduce->add_option("--out", opt.out_path, "output directory for the bundle")
      ->required();
  reproduce->add_option("--seed", opt.seed, "base seed for the suite")
      ->envname("WALPHA_SEED");

  CLI::App* boundary = app.add_subcommand(
      "emit-boundary", "sample the image of a circle as CSV rows theta,re,im");
  boundary->add_option("spec", opt.spec_path, "function description file, - for stdin")
      ->required();
  boundary->add_option("--rmax", opt.boundary_r, "radius of the sampled circle")
      ->envname("WALPHA_RMAX");
  boundary->add_option("--grid-angular", opt.defaults.grid_angular,
                       "number of sample angles")
      ->envname("WALPHA_GRID_ANGULAR")
      ->check(CLI::PositiveNumber);
  add_alpha_flag(boundary, opt);
  add_order_seed_flags(boundary, opt);
  add_out_flag(boundary, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; every usage error exits 1.
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    walpha::CommandOutcome outcome;
    if (check->parsed()) {
      outcome = walpha::cmd_check(load_spec(opt, opt.spec_path), opt.alpha,
                                  opt.defaults);
    } else if (bounds->parsed()) {
      outcome = walpha::cmd_bounds(load_spec(opt, opt.spec_path), opt.alpha,
                                   opt.defaults);
    } else if (growth->parsed()) {
      std::optional<std::filesystem::path> csv;
      if (opt.csv_path) {
        csv = std::filesystem::path(*opt.csv_path);
      }
      outcome = walpha::cmd_growth(load_spec(opt, opt.spec_path), opt.alpha,
                                   opt.defaults, opt.out_of_hypothesis, csv);
    } else if (convolve->parsed()) {
      outcome = walpha::cmd_convolve(load_spec(opt, opt.spec_path),
                                     load_spec(opt, opt.second_spec_path),
                                     opt.alpha, opt.defaults, opt.tilde);
    } else if (sections->parsed()) {
      outcome = walpha::cmd_sections(load_spec(opt, opt.spec_path), opt.alpha,
                                     opt.section_p, opt.section_q, opt.defaults);
    } else if (radius->parsed()) {
      outcome = walpha::cmd_radius(opt.defaults);
    } else if (reproduce->parsed()) {
      std::uint64_t seed = opt.seed.value_or(opt.defaults.seed);
      walpha::ReproduceOutcome rep =
          walpha::run_reproduce(std::filesystem::path(*opt.out_path), seed);
      for (const walpha::CriterionResult& c : rep.criteria) {
        std::fprintf(stdout, "criterion %2d %-28s %s\n", c.id, c.name.c_str(),
                     c.pass ? "pass" : "FAIL");
      }
      return rep.exit_code;
    } else if (boundary->parsed()) {
      outcome = walpha::cmd_emit_boundary(load_spec(opt, opt.spec_path),
                                          opt.boundary_r,
                                          opt.defaults.grid_angular);
    }
    write_output(outcome.output, opt.out_path);
    return outcome.exit_code;
  } catch (const walpha::error& e) {
    std::cerr << "walpha: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "walpha: internal error: " << e.what() << "\n";
    return 1;
  }
}
