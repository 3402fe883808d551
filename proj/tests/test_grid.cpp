#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "stpconv/golden.hpp"
#include "stpconv/grid.hpp"
#include "stpconv/io.hpp"
#include "support/generators.hpp"

using namespace stpconv;

TEST_CASE("enlarge with zero fill reproduces the padded baseline image") {
  const MaskedGrid abar = enlarge(golden::fixtures::image_3x4(), 1, 1, Fill::zero);
  CHECK(abar.rows() == 5);
  CHECK(abar.cols() == 6);
  CHECK(abar == io::read_grid_csv(
                    "0,0,0,0,0,0\n"
                    "0,1,2,-1,-2,0\n"
                    "0,-3,-2,1,3,0\n"
                    "0,2,-2,1,-1,0\n"
                    "0,0,0,0,0,0\n"));
}

TEST_CASE("enlarge with undefined fill leaves the border masked") {
  const MaskedGrid a = golden::fixtures::image_3x4();
  const MaskedGrid abar = enlarge(a, 1, 1, Fill::undefined);
  CHECK(abar.rows() == 5);
  CHECK(abar.cols() == 6);
  CHECK(abar.defined_count() == a.defined_count());
  for (std::size_t c = 0; c < abar.cols(); ++c) {
    CHECK_FALSE(abar.defined(0, c));
    CHECK_FALSE(abar.defined(4, c));
  }
  CHECK(abar.sub(1, 1, 3, 4) == a);
  CHECK(enlarge(a, 0, 0, Fill::zero) == a);
}

TEST_CASE("window extraction") {
  ConvConfig cfg{1, 1, 1, 1, 2, 2, ConvMode::classical};
  const MaskedGrid abar = enlarge(golden::fixtures::image_3x4(), 1, 1, Fill::zero);
  CHECK(window(abar, 0, 0, cfg) == io::read_grid_csv("0,0\n0,1\n"));

  ConvConfig full{0, 0, 1, 1, abar.rows(), abar.cols(), ConvMode::classical};
  CHECK(window(abar, 0, 0, full) == abar);

  CHECK_THROWS_AS(window(abar, 4, 0, cfg), ShapeError);
  CHECK_THROWS_AS(window(abar, 0, 5, cfg), ShapeError);
}

TEST_CASE("window of the irregular canvas") {
  ConvConfig cfg{0, 0, 1, 1, 2, 2, ConvMode::stp};
  const MaskedGrid canvas = enlarge(golden::fixtures::irregular_4x4(), 1, 1, Fill::undefined);
  // window (2,2) in 1-based terms
  CHECK(window(canvas, 1, 1, cfg) == io::read_grid_csv("x,1\n-2,1\n"));
}

TEST_CASE("available_vector is column-major over defined cells") {
  CHECK(*available_vector(io::read_grid_csv("1,2\n3,4\n")) == XVector{1, 3, 2, 4});
  CHECK(*available_vector(io::read_grid_csv("x,1\n-2,1\n")) == XVector{-2, 1, 1});
  CHECK_FALSE(available_vector(io::read_grid_csv("x,x\nx,x\n")).has_value());

  std::mt19937 rng(8001);
  for (int trial = 0; trial < 100; ++trial) {
    const MaskedGrid g = gen::random_grid(rng, 3, 4, 0.4);
    const auto v = available_vector(g);
    if (g.all_undefined()) {
      CHECK_FALSE(v.has_value());
    } else {
      CHECK(v->dim() == g.defined_count());
    }
  }
}

TEST_CASE("available_vector_3d orders columns, then slices, then rows") {
  // depth block 1 of the first cubic receptive field
  const MaskedGrid blank(2, 2);
  const MaskedGrid s2 = io::read_grid_csv("x,x\nx,2\n");
  const MaskedGrid s3 = io::read_grid_csv("x,x\nx,1\n");
  CHECK(*available_vector_3d({blank, s2, s3}) == XVector{2, 1});

  // depth block 1 of spatial window (2,1)
  const MaskedGrid t2 = io::read_grid_csv("x,2\nx,1\n");
  const MaskedGrid t3 = io::read_grid_csv("x,1\nx,4\n");
  CHECK(*available_vector_3d({blank, t2, t3}) == XVector{2, 1, 1, 4});

  // a single slice reduces to the 2D ordering
  std::mt19937 rng(8002);
  for (int trial = 0; trial < 50; ++trial) {
    const MaskedGrid g = gen::random_grid(rng, 3, 3, 0.3);
    CHECK(available_vector_3d({g}) == available_vector(g));
  }
}

TEST_CASE("stride equations must have integer solutions") {
  const MaskedGrid g(4, 4, 1.0);
  ConvConfig cfg{0, 0, 2, 2, 2, 2, ConvMode::stp};
  const auto counts = window_counts(g, cfg);
  CHECK(counts.vertical == 2);
  CHECK(counts.horizontal == 2);

  cfg.stride_v = 3;  // (4 - 2) % 3 != 0
  CHECK_THROWS_WITH_AS(static_cast<void>(window_counts(g, cfg)),
                       doctest::Contains("vertical"), ShapeError);
  cfg.stride_v = 2;
  cfg.rf_cols = 5;  // wider than the grid
  CHECK_THROWS_WITH_AS(static_cast<void>(window_counts(g, cfg)),
                       doctest::Contains("horizontal"), ShapeError);
}

TEST_CASE("window count law") {
  std::mt19937 rng(8003);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 0, cols = 0;
    const ConvConfig cfg = gen::random_config(rng, rows, cols);
    const MaskedGrid g(rows, cols, 1.0);
    const auto counts = window_counts(g, cfg);
    CHECK((counts.vertical - 1) * cfg.stride_v + cfg.rf_rows == rows + 2 * cfg.pad_v);
    CHECK((counts.horizontal - 1) * cfg.stride_h + cfg.rf_cols == cols + 2 * cfg.pad_h);
  }
}

TEST_CASE("masked cube invariants") {
  CHECK_THROWS_AS(MaskedCube(std::vector<MaskedGrid>{}), ShapeError);
  CHECK_THROWS_AS(MaskedCube({MaskedGrid(2, 2), MaskedGrid(2, 3)}), ShapeError);
  const MaskedCube cube = golden::fixtures::cube_3x4x2();
  CHECK(cube.rows() == 3);
  CHECK(cube.cols() == 4);
  CHECK(cube.depth() == 2);
}
