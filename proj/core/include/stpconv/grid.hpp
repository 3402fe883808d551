#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "stpconv/errors.hpp"
#include "stpconv/xvector.hpp"

namespace stpconv {

using Cell = std::optional<double>;

/// 2D array of real-or-undefined cells. Undefined cells are first-class; no
/// arithmetic is ever performed on them.
class MaskedGrid {
 public:
  MaskedGrid(std::size_t rows, std::size_t cols);  // all cells undefined
  MaskedGrid(std::size_t rows, std::size_t cols, double fill);

  static MaskedGrid from_rows(std::initializer_list<std::initializer_list<Cell>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cell& at(std::size_t r, std::size_t c) { return cells_[index(r, c)]; }
  const Cell& at(std::size_t r, std::size_t c) const { return cells_[index(r, c)]; }
  bool defined(std::size_t r, std::size_t c) const { return cells_[index(r, c)].has_value(); }
  double value(std::size_t r, std::size_t c) const { return *cells_[index(r, c)]; }

  std::size_t defined_count() const;
  bool fully_defined() const;
  bool all_undefined() const;

  MaskedGrid sub(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool operator==(const MaskedGrid& other) const = default;

 private:
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ShapeError("MaskedGrid: cell index out of range");
    return r * cols_ + c;
  }

  std::size_t rows_, cols_;
  std::vector<Cell> cells_;
};

/// Result of a cell-for-cell comparison of two masked grids.
struct GridComparison {
  bool shape_ok = false;
  bool pattern_ok = false;   // defined/undefined pattern matches
  double max_deviation = 0;  // over cells defined in both
};

GridComparison compare_grids(const MaskedGrid& a, const MaskedGrid& b);

/// Order-3 signal stored as depth-ordered slices of equal size.
class MaskedCube {
 public:
  explicit MaskedCube(std::vector<MaskedGrid> slices);

  std::size_t rows() const { return slices_[0].rows(); }
  std::size_t cols() const { return slices_[0].cols(); }
  std::size_t depth() const { return slices_.size(); }

  const MaskedGrid& slice(std::size_t k) const { return slices_[k]; }
  const std::vector<MaskedGrid>& slices() const { return slices_; }

  bool operator==(const MaskedCube& other) const = default;

 private:
  std::vector<MaskedGrid> slices_;
};

enum class Fill { zero, undefined };
enum class ConvMode { classical, stp };

/// Padding, stride, and receptive-field geometry for 2D convolution. The
/// stride equation (count-1)*stride + rf = padded extent must admit an
/// integer window count on each axis.
struct ConvConfig {
  std::size_t pad_v = 0, pad_h = 0;
  std::size_t stride_v = 1, stride_h = 1;
  std::size_t rf_rows = 1, rf_cols = 1;
  ConvMode mode = ConvMode::stp;
};

/// Windows along one axis: requires (extent - rf) divisible by stride.
/// `axis` names the dimension in the error message.
std::size_t window_count(std::size_t extent, std::size_t rf, std::size_t stride,
                         const char* axis);

struct WindowCounts {
  std::size_t vertical, horizontal;
};

/// Window counts over the padded extent implied by cfg.
WindowCounts window_counts(const MaskedGrid& a, const ConvConfig& cfg);

/// Border enlargement: pad_v extra rows on top and bottom, pad_h extra
/// columns on each side, filled with zeros or undefined cells.
MaskedGrid enlarge(const MaskedGrid& a, std::size_t pad_v, std::size_t pad_h, Fill fill);

/// Receptive field (i, j) of an already-padded grid, 0-based window indices.
MaskedGrid window(const MaskedGrid& abar, std::size_t i, std::size_t j,
                  const ConvConfig& cfg);

/// Defined entries of a window, column by column (left to right), top to
/// bottom within a column. Empty when no cell is defined.
std::optional<XVector> available_vector(const MaskedGrid& w);

/// 3D ordering: columns left to right; within a column, slices front to
/// back; within a slice, rows top to bottom.
std::optional<XVector> available_vector_3d(const std::vector<MaskedGrid>& slices);

}  // namespace stpconv
