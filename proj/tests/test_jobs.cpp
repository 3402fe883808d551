#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "stpconv/golden.hpp"
#include "stpconv/io.hpp"
#include "stpconv/jobs.hpp"

using namespace stpconv;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("stpconv_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string name(const std::string& n) const { return (path / n).string(); }
};

}  // namespace

TEST_CASE("stp2d job reproduces the damaged reference end to end") {
  TempDir dir;
  JobSpec job;
  job.mode = JobMode::stp2d;
  job.input_path = dir.file("a.csv", io::write_grid_csv(golden::fixtures::damaged_3x4()));
  job.kernel_path = dir.file("k.csv", "1,0.4\n0.6,1.5\n");
  job.pad_v = job.pad_h = 1;
  job.output_path = dir.name("out.csv");

  const std::string artifact = run(job);
  CHECK(io::read_file(job.output_path) == artifact);
  const GridComparison cmp =
      compare_grids(io::read_grid_csv(artifact), golden::reference::damaged_s());
  CHECK(cmp.shape_ok);
  CHECK(cmp.pattern_ok);
  CHECK(cmp.max_deviation <= 1e-9);

  // byte-stable across runs
  CHECK(run(job) == artifact);

  // JSON output carries the same digits
  job.format = OutputFormat::json;
  job.output_path.clear();
  const MaskedGrid from_json = io::read_grid_json(run(job));
  CHECK(from_json == io::read_grid_csv(artifact));
}

TEST_CASE("classical2d job") {
  TempDir dir;
  JobSpec job;
  job.mode = JobMode::classical2d;
  job.input_path = dir.file("a.csv", io::write_grid_csv(golden::fixtures::image_3x4()));
  job.kernel_path = dir.file("k.csv", "1,0.4\n0.6,1.5\n");
  job.pad_v = job.pad_h = 1;
  const MaskedGrid out = io::read_grid_csv(run(job));
  const MaskedGrid direct =
      classical_conv2d(golden::fixtures::image_3x4(), golden::fixtures::kernel_2x2(),
                       ConvConfig{1, 1, 1, 1, 2, 2, ConvMode::classical});
  const GridComparison cmp = compare_grids(out, direct);
  CHECK(cmp.shape_ok);
  CHECK(cmp.pattern_ok);
  CHECK(cmp.max_deviation <= 1e-9);
}

TEST_CASE("mask files knock out cells") {
  TempDir dir;
  JobSpec job;
  job.mode = JobMode::stp2d;
  job.input_path = dir.file("a.csv", "1,-1,1,2\n2,-1,9,3\n-1,3,2,1\n");
  job.kernel_path = dir.file("k.csv", "1,0.4\n0.6,1.5\n");
  job.mask_path = dir.file("m.csv", "1,1,1,1\n1,1,0,1\n1,1,1,1\n");
  job.pad_v = job.pad_h = 1;
  // masking cell (2,3) reproduces the damaged reference exactly
  const GridComparison cmp =
      compare_grids(io::read_grid_csv(run(job)), golden::reference::damaged_s());
  CHECK(cmp.pattern_ok);
  CHECK(cmp.max_deviation <= 1e-9);
}

TEST_CASE("fully masked input serializes as all x with success") {
  TempDir dir;
  JobSpec job;
  job.mode = JobMode::stp2d;
  job.input_path = dir.file("a.csv", "x,x\nx,x\n");
  job.kernel_path = dir.file("k.csv", "1,0.4\n0.6,1.5\n");
  job.pad_v = job.pad_h = 1;
  CHECK(run(job) == "x,x,x\nx,x,x\nx,x,x\n");
}

TEST_CASE("stp3d job reproduces the cubic reference") {
  TempDir dir;
  std::string cube_csv;
  for (std::size_t k = 0; k < 2; ++k) {
    if (k) cube_csv += "\n";
    cube_csv += io::write_grid_csv(golden::fixtures::cube_3x4x2().slice(k));
  }
  JobSpec job;
  job.mode = JobMode::stp3d;
  job.input_path = dir.file("a.csv", cube_csv);
  job.kernel_path = dir.file("k.csv", "1,1\n0,1\n\n1,-1\n2,3\n\n2,1\n3,3\n");
  job.pad_v = job.pad_h = 1;
  job.pad_depth = 2;
  const GridComparison cmp =
      compare_grids(io::read_grid_csv(run(job)), golden::reference::cubic_s());
  CHECK(cmp.shape_ok);
  CHECK(cmp.pattern_ok);
  CHECK(cmp.max_deviation <= 1e-9);

  // the JSON cube format feeds the same pipeline
  JobSpec jjob = job;
  jjob.input_path = dir.file(
      "a.json",
      R"({"slices": [[[2,1,3,2],[1,3,2,2],[3,2,0,1]], [[1,1,2,3],[4,2,3,4],[4,0,3,3]]]})");
  CHECK(run(jjob) == run(job));
}

TEST_CASE("stp1d and domain1d jobs") {
  TempDir dir;
  JobSpec job;
  job.mode = JobMode::stp1d;
  job.input_path = dir.file("s.csv", "1\n");
  job.kernel_path = dir.file("k.csv", "1,0.6,0.4,1.5\n");
  job.rf_cols = 1;
  CHECK(run(job) == "0.875\n");

  JobSpec dj;
  dj.mode = JobMode::domain1d;
  dj.input_path = dir.file("f.csv", "0,1\n1,1\n");
  dj.kernel_path = dir.file("w.csv", "0,1\n1,1\n");
  CHECK(run(dj) == "0,1\n1,2\n2,1\n");
}

TEST_CASE("jobs propagate typed errors") {
  TempDir dir;
  JobSpec job;
  job.mode = JobMode::stp2d;
  job.kernel_path = dir.file("k.csv", "1,0.4\n0.6,1.5\n");

  job.input_path = dir.file("bad.csv", "1,garble\n");
  CHECK_THROWS_AS(run(job), ParseError);

  job.input_path = dir.file("a.csv", "1,2\n3,4\n5,6\n");
  job.stride_v = 2;  // (3 - 2) is not divisible by 2
  CHECK_THROWS_AS(run(job), ShapeError);
  job.stride_v = 1;

  job.input_path = dir.name("missing.csv");
  CHECK_THROWS_AS(run(job), IoError);

  job.input_path = dir.file("a2.csv", "1,2\n3,4\n");
  job.output_path = "/nonexistent/dir/out.csv";
  CHECK_THROWS_AS(run(job), IoError);
}

TEST_CASE("golden runner reports all six cases and flags perturbations") {
  const auto results = golden::run_all();
  CHECK(results.size() == 6);
  for (const auto& r : results) {
    CHECK(r.shape_ok);
    // the three self-consistent reference matrices reproduce exactly
    if (r.name == "stp-irregular" || r.name == "stp-damaged" || r.name == "stp-cubic") {
      CHECK(r.pass);
      CHECK(r.max_deviation <= 1e-12);
    }
  }

  // a perturbed matrix is reported as a failure under the case's name
  MaskedGrid perturbed = golden::reference::damaged_s();
  perturbed.at(0, 0) = perturbed.value(0, 0) + 1e-6;
  const auto flagged = golden::compare_case(
      "stp-damaged",
      stp_conv2d(golden::fixtures::damaged_3x4(), golden::fixtures::kernel_2x2(),
                 ConvConfig{1, 1, 1, 1, 2, 2, ConvMode::stp}),
      perturbed);
  CHECK_FALSE(flagged.pass);
  CHECK(flagged.name == "stp-damaged");
  CHECK(flagged.max_deviation >= 1e-7);

  const std::string report = golden::format_report(results);
  CHECK(report.find("stp-cubic") != std::string::npos);
  CHECK(report.find("PASS") != std::string::npos);
}
