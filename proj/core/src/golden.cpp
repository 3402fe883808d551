#include "stpconv/golden.hpp"

#include <sstream>

#include "stpconv/io.hpp"

namespace stpconv::golden {

namespace {

MaskedGrid scaled(MaskedGrid g, double factor) {
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g.defined(r, c)) g.at(r, c) = g.value(r, c) * factor;
  return g;
}

}  // namespace

namespace fixtures {

MaskedGrid image_3x4() {
  return io::read_grid_csv(
      "1,2,-1,-2\n"
      "-3,-2,1,3\n"
      "2,-2,1,-1\n");
}

Kernel2D kernel_2x2() {
  return Kernel2D(io::read_grid_csv(
      "1,0.4\n"
      "0.6,1.5\n"));
}

MaskedGrid irregular_4x4() {
  return io::read_grid_csv(
      "x,1,-1,x\n"
      "-2,1,2,1\n"
      "-3,2,3,x\n"
      "2,-2,x,x\n");
}

MaskedGrid damaged_3x4() {
  return io::read_grid_csv(
      "1,-1,1,2\n"
      "2,-1,x,3\n"
      "-1,3,2,1\n");
}

MaskedGrid proportional_5x5() {
  return io::read_grid_csv(
      "1,-1,3,2,1\n"
      "2,1,-2,-1,2\n"
      "1,3,2,1,1\n"
      "-1,-2,1,2,-1\n"
      "2,3,-3,-2,-1\n");
}

MaskedCube cube_3x4x2() {
  return io::read_cube_csv(
      "2,1,3,2\n"
      "1,3,2,2\n"
      "3,2,0,1\n"
      "\n"
      "1,1,2,3\n"
      "4,2,3,4\n"
      "4,0,3,3\n");
}

MaskedGrid cube_kernel() {
  return io::read_grid_csv(
      "1,1\n"
      "0,1\n"
      "1,-1\n"
      "2,3\n"
      "2,1\n"
      "3,3\n");
}

}  // namespace fixtures

namespace reference {

MaskedGrid classical_s() {
  return io::read_grid_csv(
      "1.5,3.6,-0.3,-3.6,-1.2\n"
      "-4.1,-3.5,0.9,3.8,0.8\n"
      "1.8,-4.1,-0.3,0.8,0.9\n"
      "0.8,0.2,-0.6,0.1,-0.5\n");
}

MaskedGrid stp_s() {
  return scaled(io::read_grid_csv(
                    "3.5,5.6,0.7,-5.6,-7\n"
                    "-4.9,-3.5,0.9,3.8,3.5\n"
                    "0,-4.1,-0.3,0.8,2.1\n"
                    "7,-0.4,-0.7,-0.7,-3.8\n"),
                1.0 / 4.0);
}

MaskedGrid irregular_s() {
  return scaled(io::read_grid_csv(
                    "x,10.5,-0.9,-10.5,x\n"
                    "-21,-0.3,12.6,5.3,10.5\n"
                    "-26.7,-1.2,22.5,18.1,10.5\n"
                    "-3,-12,17.9,31.5,x\n"
                    "21,-1.8,-21,x,x\n"),
                1.0 / 12.0);
}

MaskedGrid damaged_s() {
  return scaled(io::read_grid_csv(
                    "10.5,-0.9,0.9,16.2,21\n"
                    "16.2,0.9,-0.7,22.3,26.7\n"
                    "3.9,16.5,12.2,18.1,20.1\n"
                    "-10.5,12.3,25.8,15.3,10.5\n"),
                1.0 / 12.0);
}

MaskedGrid proportional_s() {
  return scaled(io::read_grid_csv(
                    "29.7,7.2,43.2\n"
                    "14.7,26.5,-9.9\n"
                    "35.1,-7.8,-7.8\n"),
                1.0 / 36.0);
}

MaskedGrid cubic_s() {
  return scaled(io::read_grid_csv(
                    "13,9.5,13,21.5,21\n"
                    "13,9.5,13,21.5,21\n"
                    "20,16.25,18,24.75,24.5\n"
                    "20,16.25,18,24.75,24.5\n"
                    "27.5,21.25,17.5,25,18\n"
                    "27.5,21.25,17.5,25,18\n"
                    "29.5,18,12.5,21.5,16.5\n"
                    "29.5,18,12.5,21.5,16.5\n"),
                1.0 / 6.0);
}

MaskedGrid cubic_psi() {
  return io::read_grid_csv(
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,2,2,1,1,3,3,2,2,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,1,1,1,1,2,2,3,3,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,2,2,1,1,3,3,2,2,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,1,1,1,1,2,2,3,3,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,2,2,1,1,3,3,2,2,x\n"
      "x,1,1,3,3,2,2,2,2,x\n"
      "x,1,1,1,1,2,2,3,3,x\n"
      "x,4,4,2,2,3,3,4,4,x\n"
      "x,2,2,1,1,3,3,2,2,x\n"
      "x,1,1,3,3,2,2,2,2,x\n"
      "x,1,1,1,1,2,2,3,3,x\n"
      "x,4,4,2,2,3,3,4,4,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,1,1,3,3,2,2,2,2,x\n"
      "x,3,3,2,2,0,0,1,1,x\n"
      "x,4,4,2,2,3,3,4,4,x\n"
      "x,4,4,0,0,3,3,3,3,x\n"
      "x,1,1,3,3,2,2,2,2,x\n"
      "x,3,3,2,2,0,0,1,1,x\n"
      "x,4,4,2,2,3,3,4,4,x\n"
      "x,4,4,0,0,3,3,3,3,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,3,3,2,2,0,0,1,1,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,4,4,0,0,3,3,3,3,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,3,3,2,2,0,0,1,1,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,4,4,0,0,3,3,3,3,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n"
      "x,x,x,x,x,x,x,x,x,x\n");
}

SelectorMatrix xi_5_2_1() {
  const MaskedGrid g = io::read_grid_csv(
      "1,0,0,0,0,0,0,0,0,0\n"
      "0,1,1,0,0,0,0,0,0,0\n"
      "0,0,0,1,1,0,0,0,0,0\n"
      "0,0,0,0,0,1,1,0,0,0\n"
      "0,0,0,0,0,0,0,1,1,0\n"
      "0,0,0,0,0,0,0,0,0,1\n");
  SelectorMatrix m(g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) m.set(r, c, g.value(r, c) != 0.0);
  return m;
}

}  // namespace reference

CaseResult compare_case(const std::string& name, const MaskedGrid& actual,
                        const MaskedGrid& expected) {
  CaseResult res;
  res.name = name;
  const GridComparison cmp = compare_grids(actual, expected);
  res.shape_ok = cmp.shape_ok;
  res.pattern_ok = cmp.pattern_ok;
  res.max_deviation = cmp.max_deviation;
  res.pass = cmp.shape_ok && cmp.pattern_ok && cmp.max_deviation <= kTolerance;
  return res;
}

std::vector<CaseResult> run_all() {
  std::vector<CaseResult> results;

  {
    ConvConfig cfg{1, 1, 1, 1, 2, 2, ConvMode::classical};
    results.push_back(compare_case(
        "classical-baseline",
        classical_conv2d(fixtures::image_3x4(), fixtures::kernel_2x2(), cfg),
        reference::classical_s()));
  }
  {
    ConvConfig cfg{1, 1, 1, 1, 2, 2, ConvMode::stp};
    results.push_back(
        compare_case("stp-2d", stp_conv2d(fixtures::image_3x4(), fixtures::kernel_2x2(), cfg),
                     reference::stp_s()));
  }
  {
    ConvConfig cfg{1, 1, 1, 1, 2, 2, ConvMode::stp};
    results.push_back(compare_case(
        "stp-irregular",
        stp_conv2d(fixtures::irregular_4x4(), fixtures::kernel_2x2(), cfg),
        reference::irregular_s()));
  }
  {
    ConvConfig cfg{1, 1, 1, 1, 2, 2, ConvMode::stp};
    results.push_back(
        compare_case("stp-damaged",
                     stp_conv2d(fixtures::damaged_3x4(), fixtures::kernel_2x2(), cfg),
                     reference::damaged_s()));
  }
  {
    ConvConfig cfg{1, 1, 2, 2, 3, 3, ConvMode::stp};
    results.push_back(compare_case(
        "stp-proportional",
        stp_conv2d(fixtures::proportional_5x5(), fixtures::kernel_2x2(), cfg),
        reference::proportional_s()));
  }
  {
    CubicConfig cfg;
    cfg.pad_v = cfg.pad_h = 1;
    cfg.pad_depth = 2;
    cfg.rf_rows = cfg.rf_cols = 2;
    cfg.rf_depth = 3;
    results.push_back(compare_case(
        "stp-cubic", stp_conv3d(fixtures::cube_3x4x2(), fixtures::cube_kernel(), cfg),
        reference::cubic_s()));
  }
  return results;
}

std::string format_report(const std::vector<CaseResult>& results) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.shape_ok) {
      out << "  (output shape differs from reference)";
    } else {
      out << "  max|dev| = " << io::format_number(r.max_deviation);
      if (!r.pattern_ok) out << "  (undefined-cell pattern differs)";
    }
    out << "\n";
    if (!r.pass) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " reference cases passed\n";
  return out.str();
}

}  // namespace stpconv::golden
