#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stpconv/grid.hpp"

namespace stpconv {

/// Structured 0/1 matrix (banded window selectors, swap permutations, and
/// their Kronecker compositions). Stored densely; application to masked
/// grids is pure selection, so undefined cells pass through untouched.
class SelectorMatrix {
 public:
  SelectorMatrix(std::size_t rows, std::size_t cols);

  static SelectorMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  SelectorMatrix transpose() const;

  /// this * g. Every row must contain exactly one 1; the result row is a
  /// copy of the selected source row.
  MaskedGrid apply_left(const MaskedGrid& g) const;

  /// g * this. Every column must contain exactly one 1.
  MaskedGrid apply_right(const MaskedGrid& g) const;

  /// 0/1 matrix product; throws if any resulting entry exceeds 1.
  SelectorMatrix multiply(const SelectorMatrix& other) const;

  std::size_t row_sum(std::size_t r) const;
  std::size_t col_sum(std::size_t c) const;

  bool operator==(const SelectorMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint8_t> bits_;
};

SelectorMatrix kron(const SelectorMatrix& a, const SelectorMatrix& b);

/// Banded window selector with (n-1)*d + eta rows and n*eta columns; block i
/// carries an eta x eta identity at rows [i*d, i*d + eta), columns
/// [i*eta, (i+1)*eta). Requires 0 < d <= eta (d == eta gives disjoint,
/// non-overlapping windows).
SelectorMatrix xi(std::size_t n, std::size_t eta, std::size_t d);

/// Permutation W with W * (x (x) y) = y (x) x for x of dimension m and y of
/// dimension n.
SelectorMatrix swap_matrix(std::size_t m, std::size_t n);

/// Receptive field matrix P * abar * Q for window size s x t and strides
/// dv, dh: the (i, j) block of the result is window (i, j) of abar.
MaskedGrid rfm_2d(const MaskedGrid& abar, std::size_t s, std::size_t t,
                  std::size_t dv, std::size_t dh);

/// Grid repeated reps_v x reps_h times (block tiling).
MaskedGrid tile(const MaskedGrid& g, std::size_t reps_v, std::size_t reps_h);

}  // namespace stpconv
