#pragma once

#include <cstddef>
#include <vector>

#include "stpconv/grid.hpp"
#include "stpconv/selectors.hpp"

namespace stpconv {

/// Geometry for order-3 convolution. pad_v and pad_h are per-side spatial
/// borders; pad_depth is the total number of extra undefined slices, split
/// evenly front/back (odd values are rejected). Kernel size equals the
/// receptive field: rf_rows x rf_cols x rf_depth.
struct CubicConfig {
  std::size_t pad_v = 0, pad_h = 0, pad_depth = 0;
  std::size_t stride_v = 1, stride_h = 1, stride_depth = 1;
  std::size_t rf_rows = 1, rf_cols = 1, rf_depth = 1;
};

struct CubicWindowCounts {
  std::size_t vertical, horizontal, depth;
};

CubicWindowCounts cubic_window_counts(const MaskedCube& a, const CubicConfig& cfg);

/// Slice-stacked matrix form: slices laid out vertically, (depth * rows) x cols.
MaskedGrid matricize(const MaskedCube& a);

/// Inverse of matricize for a stack of `depth` equal slices.
MaskedCube dematricize(const MaskedGrid& m, std::size_t depth);

/// Undefined-fill enlargement on all three axes.
MaskedCube enlarge_cube(const MaskedCube& a, const CubicConfig& cfg);

/// Block matrix of cubic receptive fields: one (rf_depth * rf_rows) x rf_cols
/// block per (vertical, depth, horizontal) window, with the depth index
/// running fastest within the block rows and each block grouping its depth
/// slices top to bottom.
class PsiMatrix {
 public:
  PsiMatrix(MaskedGrid flat, std::size_t n_v, std::size_t n_z, std::size_t n_h,
            std::size_t s, std::size_t t, std::size_t xi);

  const MaskedGrid& flat() const { return flat_; }
  std::size_t block_rows() const { return n_v_ * n_z_; }
  std::size_t block_cols() const { return n_h_; }
  std::size_t n_v() const { return n_v_; }
  std::size_t n_z() const { return n_z_; }
  std::size_t n_h() const { return n_h_; }

  /// Block (i, j), i < n_v * n_z, j < n_h; size (xi * s) x t.
  MaskedGrid block(std::size_t i, std::size_t j) const;

  bool operator==(const PsiMatrix& other) const = default;

 private:
  MaskedGrid flat_;
  std::size_t n_v_, n_z_, n_h_, s_, t_, xi_;
};

/// Receptive-field blocks gathered directly by index arithmetic (the
/// normative construction).
PsiMatrix build_psi(const MaskedCube& a, const CubicConfig& cfg);

/// Same matrix assembled through the selector chain: per-slice row/column
/// selection, depth-padded stacking, swap-based row reordering, then the
/// depth selector. Always equals build_psi.
PsiMatrix build_psi_chain(const MaskedCube& a, const CubicConfig& cfg);

/// Order-3 padding-free convolution. `kernel` is the slice-stacked
/// (rf_depth * rf_rows) x rf_cols matrix and must be fully defined. The
/// result has n_v * n_z rows and n_h columns; cells whose receptive field
/// holds no available entries are undefined.
MaskedGrid stp_conv3d(const MaskedCube& a, const MaskedGrid& kernel, const CubicConfig& cfg);

}  // namespace stpconv
