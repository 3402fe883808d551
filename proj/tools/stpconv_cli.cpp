// Command-line front end: runs one convolution job described by flags, or
// the bundled reference cases via the `golden` subcommand.
//
// Exit codes: 0 success, 1 parse error, 2 shape/stride mismatch, 3 I/O failure.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "stpconv/errors.hpp"
#include "stpconv/golden.hpp"
#include "stpconv/jobs.hpp"

namespace {

int run_golden() {
  const auto results = stpconv::golden::run_all();
  std::cout << stpconv::golden::format_report(results);
  for (const auto& r : results)
    if (!r.pass) return 4;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension-free convolution engine"};
  app.require_subcommand(0, 1);

  CLI::App* golden = app.add_subcommand(
      "golden", "Recompute the bundled reference cases and report deviations");

  stpconv::JobSpec job;
  std::string mode_name, format_name = "csv";

  app.add_option("--mode", mode_name, "classical2d | stp2d | stp1d | stp3d | domain1d");
  app.add_option("--input", job.input_path, "input signal/image/volume file");
  app.add_option("--kernel", job.kernel_path, "kernel file");
  app.add_option("--mask", job.mask_path, "optional availability mask (0/x = undefined)");
  app.add_option("--output", job.output_path, "output file (stdout when omitted)");
  app.add_option("--format", format_name, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--pad-v", job.pad_v, "vertical padding per side");
  app.add_option("--pad-h", job.pad_h, "horizontal padding per side");
  app.add_option("--pad-depth", job.pad_depth, "total depth padding (even, split front/back)");
  app.add_option("--stride-v", job.stride_v, "vertical step length");
  app.add_option("--stride-h", job.stride_h, "horizontal step length");
  app.add_option("--stride-depth", job.stride_depth, "depth step length");

  std::size_t rf_rows = 0, rf_cols = 0, rf_depth = 0;
  auto* rf_rows_opt = app.add_option("--rf-rows", rf_rows, "receptive field rows (default: kernel)");
  auto* rf_cols_opt = app.add_option("--rf-cols", rf_cols, "receptive field columns (default: kernel)");
  auto* rf_depth_opt = app.add_option("--rf-depth", rf_depth, "receptive field depth (default: kernel)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (golden->parsed()) return run_golden();

  if (mode_name == "classical2d") {
    job.mode = stpconv::JobMode::classical2d;
  } else if (mode_name == "stp2d") {
    job.mode = stpconv::JobMode::stp2d;
  } else if (mode_name == "stp1d") {
    job.mode = stpconv::JobMode::stp1d;
  } else if (mode_name == "stp3d") {
    job.mode = stpconv::JobMode::stp3d;
  } else if (mode_name == "domain1d") {
    job.mode = stpconv::JobMode::domain1d;
  } else {
    std::cerr << "error: --mode must be one of classical2d, stp2d, stp1d, stp3d, domain1d\n";
    return 1;
  }
  if (job.input_path.empty() || job.kernel_path.empty()) {
    std::cerr << "error: --input and --kernel are required\n";
    return 1;
  }
  job.format = format_name == "json" ? stpconv::OutputFormat::json
                                     : stpconv::OutputFormat::csv;
  if (rf_rows_opt->count()) job.rf_rows = rf_rows;
  if (rf_cols_opt->count()) job.rf_cols = rf_cols;
  if (rf_depth_opt->count()) job.rf_depth = rf_depth;

  try {
    const std::string artifact = stpconv::run(job);
    if (job.output_path.empty()) std::cout << artifact;
    return 0;
  } catch (const stpconv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const stpconv::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
