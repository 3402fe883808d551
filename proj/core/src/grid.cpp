#include "stpconv/grid.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace stpconv {

MaskedGrid::MaskedGrid(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols) {
  if (rows == 0 || cols == 0) throw ShapeError("MaskedGrid: dimensions must be >= 1");
}

MaskedGrid::MaskedGrid(std::size_t rows, std::size_t cols, double fill)
    : MaskedGrid(rows, cols) {
  for (auto& c : cells_) c = fill;
}

MaskedGrid MaskedGrid::from_rows(std::initializer_list<std::initializer_list<Cell>> rows) {
  if (rows.size() == 0) throw ShapeError("MaskedGrid: dimensions must be >= 1");
  const std::size_t nc = rows.begin()->size();
  MaskedGrid g(rows.size(), nc);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != nc) throw ShapeError("MaskedGrid: ragged row in initializer");
    std::size_t c = 0;
    for (const Cell& cell : row) {
      if (cell && !std::isfinite(*cell))
        throw ShapeError("MaskedGrid: defined cells must be finite");
      g.at(r, c++) = cell;
    }
    ++r;
  }
  return g;
}

std::size_t MaskedGrid::defined_count() const {
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.has_value() ? 1 : 0;
  return n;
}

bool MaskedGrid::fully_defined() const { return defined_count() == cells_.size(); }

bool MaskedGrid::all_undefined() const { return defined_count() == 0; }

MaskedGrid MaskedGrid::sub(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw ShapeError("MaskedGrid::sub: window exceeds grid bounds");
  MaskedGrid out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.at(r, c) = at(r0 + r, c0 + c);
  return out;
}

GridComparison compare_grids(const MaskedGrid& a, const MaskedGrid& b) {
  GridComparison cmp;
  cmp.shape_ok = a.rows() == b.rows() && a.cols() == b.cols();
  if (!cmp.shape_ok) return cmp;
  cmp.pattern_ok = true;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.defined(r, c) != b.defined(r, c)) {
        cmp.pattern_ok = false;
      } else if (a.defined(r, c)) {
        const double d = std::abs(a.value(r, c) - b.value(r, c));
        if (d > cmp.max_deviation) cmp.max_deviation = d;
      }
    }
  }
  return cmp;
}

MaskedCube::MaskedCube(std::vector<MaskedGrid> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw ShapeError("MaskedCube: depth must be >= 1");
  for (const auto& s : slices_) {
    if (s.rows() != slices_[0].rows() || s.cols() != slices_[0].cols())
      throw ShapeError("MaskedCube: slices must share dimensions");
  }
}

std::size_t window_count(std::size_t extent, std::size_t rf, std::size_t stride,
                         const char* axis) {
  if (rf == 0) throw ShapeError(std::string(axis) + ": receptive field must be >= 1");
  if (stride == 0) throw ShapeError(std::string(axis) + ": stride must be >= 1");
  if (extent < rf || (extent - rf) % stride != 0)
    throw ShapeError(std::string(axis) + ": stride equation has no integer solution (extent " +
                     std::to_string(extent) + ", rf " + std::to_string(rf) + ", stride " +
                     std::to_string(stride) + ")");
  return (extent - rf) / stride + 1;
}

WindowCounts window_counts(const MaskedGrid& a, const ConvConfig& cfg) {
  return {window_count(a.rows() + 2 * cfg.pad_v, cfg.rf_rows, cfg.stride_v, "vertical"),
          window_count(a.cols() + 2 * cfg.pad_h, cfg.rf_cols, cfg.stride_h, "horizontal")};
}

MaskedGrid enlarge(const MaskedGrid& a, std::size_t pad_v, std::size_t pad_h, Fill fill) {
  MaskedGrid out = fill == Fill::zero
                       ? MaskedGrid(a.rows() + 2 * pad_v, a.cols() + 2 * pad_h, 0.0)
                       : MaskedGrid(a.rows() + 2 * pad_v, a.cols() + 2 * pad_h);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(pad_v + r, pad_h + c) = a.at(r, c);
  return out;
}

MaskedGrid window(const MaskedGrid& abar, std::size_t i, std::size_t j,
                  const ConvConfig& cfg) {
  const std::size_t sv = window_count(abar.rows(), cfg.rf_rows, cfg.stride_v, "vertical");
  const std::size_t sh = window_count(abar.cols(), cfg.rf_cols, cfg.stride_h, "horizontal");
  if (i >= sv || j >= sh) throw ShapeError("window: index out of range");
  return abar.sub(i * cfg.stride_v, j * cfg.stride_h, cfg.rf_rows, cfg.rf_cols);
}

std::optional<XVector> available_vector(const MaskedGrid& w) {
  std::vector<double> vals;
  vals.reserve(w.rows() * w.cols());
  for (std::size_t c = 0; c < w.cols(); ++c)
    for (std::size_t r = 0; r < w.rows(); ++r)
      if (w.defined(r, c)) vals.push_back(w.value(r, c));
  if (vals.empty()) return std::nullopt;
  return XVector(std::move(vals));
}

std::optional<XVector> available_vector_3d(const std::vector<MaskedGrid>& slices) {
  if (slices.empty()) throw ShapeError("available_vector_3d: no slices");
  for (const auto& s : slices) {
    if (s.rows() != slices[0].rows() || s.cols() != slices[0].cols())
      throw ShapeError("available_vector_3d: slices must share dimensions");
  }
  std::vector<double> vals;
  for (std::size_t c = 0; c < slices[0].cols(); ++c)
    for (const auto& s : slices)
      for (std::size_t r = 0; r < s.rows(); ++r)
        if (s.defined(r, c)) vals.push_back(s.value(r, c));
  if (vals.empty()) return std::nullopt;
  return XVector(std::move(vals));
}

}  // namespace stpconv
