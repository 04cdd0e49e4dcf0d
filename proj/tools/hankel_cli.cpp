// Command-line driver for the toolkit. Subcommands mirror the runner:
//   verify-bound  end-to-end certificate for the ninth, with sharpness witness
//   scan          certified grid maximization of the majorant
//   extremal      the witness function, built two ways and cross-checked
//   sample        seeded Herglotz draws streamed as CSV
//   revert        inverse coefficients A2..A5 from a2..a5
//   cases         face/edge value table with mismatch flags
// Exit code is 0 iff every assertion of the run passed.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hankel/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"certified bound toolkit for third Hankel determinants of inverse "
               "starlike functions of order 1/2"};
  app.require_subcommand(1);

  hankel::RunConfig cfg;
  std::string format = "json";
  std::string output_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output", output_path, "write the report to a file instead of stdout");
    cmd->add_option("--workers", cfg.workers, "worker threads (0 = auto); results are identical")
        ->check(CLI::Range(0, 64));
    cmd->add_option("--tolerance", cfg.tolerance, "floating comparison tolerance");
  };

  auto* verify = app.add_subcommand("verify-bound", "run the full verification chain");
  verify->add_option("--grid-step", cfg.grid_step, "scan grid step, in (0, 0.05]");
  verify->add_option("--samples", cfg.samples, "dominance-check sample count");
  verify->add_option("--seed", cfg.seed, "dominance-check seed");
  verify->add_flag("--exact", cfg.exact, "render the witness exactly as p/q");
  add_common(verify);

  auto* scan = app.add_subcommand("scan", "certified maximization of the majorant");
  scan->add_option("--grid-step", cfg.grid_step, "grid step, in (0, 0.05]");
  scan->add_flag("--refine", cfg.refine, "adaptively subdivide cells near the certificate cap");
  add_common(scan);

  auto* extremal = app.add_subcommand("extremal", "build and cross-check the witness function");
  extremal->add_flag("--exact", cfg.exact, "exact rational output (always exact internally)");
  add_common(extremal);

  auto* sample = app.add_subcommand("sample", "stream seeded Herglotz draws");
  sample->add_option("--samples", cfg.samples, "number of draws");
  sample->add_option("--seed", cfg.seed, "base seed; per-row seeds are derived from it");
  sample->add_option("--atoms", cfg.atoms, "atoms per measure, in [1, 64]")
      ->check(CLI::Range(1, 64));
  add_common(sample);

  auto* revert = app.add_subcommand("revert", "inverse coefficients from direct ones");
  revert->add_option("--coeffs", cfg.coeffs, "a2,a3,a4,a5 (decimal or p/q)")->required();
  revert->add_flag("--exact", cfg.exact, "parse and print exact rationals");
  add_common(revert);

  auto* cases = app.add_subcommand("cases", "face/edge table with mismatch flags");
  add_common(cases);

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) cfg.command = hankel::Command::verify_bound;
  if (scan->parsed()) cfg.command = hankel::Command::scan;
  if (extremal->parsed()) cfg.command = hankel::Command::extremal;
  if (sample->parsed()) {
    cfg.command = hankel::Command::sample;
    if (sample->count("--format") == 0) format = "csv";  // sample streams CSV by default
  }
  if (revert->parsed()) cfg.command = hankel::Command::revert;
  if (cases->parsed()) cfg.command = hankel::Command::cases;
  cfg.output_format = hankel::parse_output_format(format);

  try {
    if (!output_path.empty()) {
      std::ofstream out(output_path);
      if (!out) {
        std::cerr << "cannot open output file: " << output_path << "\n";
        return 2;
      }
      return hankel::run(cfg, out);
    }
    return hankel::run(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
