// Deterministic random inputs for property tests.
#pragma once

#include <random>
#include <vector>

#include "stpconv/conv.hpp"
#include "stpconv/grid.hpp"
#include "stpconv/xvector.hpp"

namespace gen {

using stpconv::MaskedGrid;
using stpconv::XVector;

inline XVector random_xvector(std::mt19937& rng, std::size_t min_dim = 1,
                              std::size_t max_dim = 12) {
  std::uniform_int_distribution<std::size_t> dim_dist(min_dim, max_dim);
  std::uniform_real_distribution<double> val_dist(-2.0, 2.0);
  std::vector<double> vals(dim_dist(rng));
  for (auto& v : vals) v = val_dist(rng);
  return XVector(vals);
}

inline XVector random_int_xvector(std::mt19937& rng, std::size_t min_dim = 1,
                                  std::size_t max_dim = 8) {
  std::uniform_int_distribution<std::size_t> dim_dist(min_dim, max_dim);
  std::uniform_int_distribution<int> val_dist(-4, 4);
  std::vector<double> vals(dim_dist(rng));
  for (auto& v : vals) v = val_dist(rng);
  return XVector(vals);
}

inline MaskedGrid random_grid(std::mt19937& rng, std::size_t rows, std::size_t cols,
                              double mask_prob = 0.0) {
  std::uniform_real_distribution<double> val_dist(-3.0, 3.0);
  std::bernoulli_distribution masked(mask_prob);
  MaskedGrid g(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (mask_prob == 0.0 || !masked(rng)) g.at(r, c) = val_dist(rng);
  return g;
}

inline stpconv::FiniteSignal random_signal(std::mt19937& rng, bool integer_values = false,
                                           std::size_t max_points = 6) {
  std::uniform_int_distribution<std::size_t> count_dist(1, max_points);
  std::uniform_int_distribution<long long> idx_dist(-8, 8);
  std::uniform_real_distribution<double> val_dist(-2.0, 2.0);
  std::uniform_int_distribution<int> ival_dist(-4, 4);
  std::map<long long, double> pts;
  const std::size_t count = count_dist(rng);
  while (pts.size() < count)
    pts[idx_dist(rng)] = integer_values ? ival_dist(rng) : val_dist(rng);
  return stpconv::FiniteSignal(pts);
}

/// Valid 2D geometry generated windows-first so the stride equations always
/// hold: extent = (count - 1) * stride + rf.
inline stpconv::ConvConfig random_config(std::mt19937& rng, std::size_t& rows,
                                         std::size_t& cols,
                                         stpconv::ConvMode mode = stpconv::ConvMode::stp) {
  std::uniform_int_distribution<std::size_t> count_dist(1, 4);
  std::uniform_int_distribution<std::size_t> rf_dist(1, 3);
  std::uniform_int_distribution<std::size_t> pad_dist(0, 2);

  stpconv::ConvConfig cfg;
  cfg.mode = mode;
  for (int axis = 0; axis < 2; ++axis) {
    for (;;) {
      const std::size_t count = count_dist(rng);
      const std::size_t rf = rf_dist(rng);
      std::uniform_int_distribution<std::size_t> stride_dist(1, rf);
      const std::size_t stride = stride_dist(rng);
      const std::size_t extent = (count - 1) * stride + rf;
      const std::size_t pad = std::min(pad_dist(rng), extent > 1 ? (extent - 1) / 2 : 0);
      if (extent <= 2 * pad) continue;
      if (axis == 0) {
        cfg.rf_rows = rf;
        cfg.stride_v = stride;
        cfg.pad_v = pad;
        rows = extent - 2 * pad;
      } else {
        cfg.rf_cols = rf;
        cfg.stride_h = stride;
        cfg.pad_h = pad;
        cols = extent - 2 * pad;
      }
      break;
    }
  }
  return cfg;
}

}  // namespace gen
