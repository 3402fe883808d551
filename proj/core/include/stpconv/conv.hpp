#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "stpconv/grid.hpp"
#include "stpconv/xvector.hpp"

namespace stpconv {

/// Fully defined convolution kernel with its column-major vectorization
/// cached.
class Kernel2D {
 public:
  explicit Kernel2D(MaskedGrid grid);

  const MaskedGrid& grid() const { return grid_; }
  const XVector& vec() const { return vec_; }
  std::size_t rows() const { return grid_.rows(); }
  std::size_t cols() const { return grid_.cols(); }

 private:
  MaskedGrid grid_;
  XVector vec_;
};

/// Zero-padded baseline: each output cell is the plain dot product of the
/// kernel with its receptive field. Input must be fully defined and the
/// receptive field must equal the kernel size.
MaskedGrid classical_conv2d(const MaskedGrid& a, const Kernel2D& k, const ConvConfig& cfg);

/// Blockwise inner product of two identically partitioned grids. With both
/// operands fully defined each block yields the conventional dot product of
/// the column-major block vectorizations. When either operand carries
/// undefined cells, each block contributes the dimension-free inner product
/// of the two per-operand available vectors; positions undefined in both
/// partially-masked operands are excluded from both sides. A block with no
/// usable entries yields an undefined cell.
MaskedGrid block_hadamard(const MaskedGrid& a, const MaskedGrid& b,
                          std::size_t block_rows, std::size_t block_cols);

/// Padding-free convolution: windows are cut from an undefined-padded
/// enlargement, each cell is the dimension-free inner product of the
/// window's available vector with the kernel vector. Receptive fields may be
/// larger than the kernel (proportional mode). Output cells with no
/// available entries are undefined.
MaskedGrid stp_conv2d(const MaskedGrid& a, const Kernel2D& k, const ConvConfig& cfg);

/// One output channel per (filter, input channel) pair, filter-major order.
std::vector<MaskedGrid> multi_filter_conv(const std::vector<MaskedGrid>& channels,
                                          const std::vector<Kernel2D>& filters,
                                          const ConvConfig& cfg);

/// Real-valued signal on a finite set of integer sample points.
class FiniteSignal {
 public:
  explicit FiniteSignal(std::map<long long, double> points);
  FiniteSignal(std::initializer_list<std::pair<const long long, double>> points);

  static FiniteSignal unit_impulse(long long at) { return FiniteSignal({{at, 1.0}}); }

  const std::map<long long, double>& points() const { return points_; }
  bool contains(long long n) const { return points_.count(n) != 0; }
  double at(long long n) const;  // 0 outside the support
  double l1_norm() const;

  bool operator==(const FiniteSignal& other) const = default;

 private:
  std::map<long long, double> points_;
};

enum class ConvVariant { conv, flipped, cross_correlation };

/// Discrete windowed convolution over finite supports.
///   conv:               s(n) = sum_tau f(tau) k(n - tau)
///   flipped:            s(n) = sum_tau f(n - tau) k(tau)
///   cross_correlation:  s(n) = sum_tau f(n + tau) k(tau)
/// The result support contains every n with at least one contributing term.
FiniteSignal discrete_conv1d(const FiniteSignal& f, const FiniteSignal& k, ConvVariant v);

/// Convolution summed over the domain of f only: s(n) = sum_{tau in D} f(tau) w(n - tau).
FiniteSignal domain_conv1d(const FiniteSignal& f, const FiniteSignal& w);

struct Conv1dConfig {
  std::size_t pad = 0;
  std::size_t stride = 1;
  std::size_t window = 1;
};

/// 1D padding-free convolution on a masked sample sequence.
std::vector<Cell> stp_conv1d(const std::vector<Cell>& signal, const XVector& kernel,
                             const Conv1dConfig& cfg);

/// Gradient of every output cell of stp_conv2d with respect to the kernel
/// entries. Each per-cell gradient is a fully defined kernel-shaped grid
/// (zero where the output cell is undefined); it does not depend on the
/// kernel values.
struct KernelGradient {
  std::size_t out_rows = 0, out_cols = 0;
  std::vector<MaskedGrid> per_cell;

  const MaskedGrid& at(std::size_t i, std::size_t j) const {
    return per_cell[i * out_cols + j];
  }
};

KernelGradient grad_kernel(const MaskedGrid& a, const Kernel2D& k, const ConvConfig& cfg);

/// Adjoint of stp_conv2d: accumulates upstream cotangents onto the defined
/// input cells. Undefined input cells stay undefined; undefined upstream
/// cells contribute nothing.
MaskedGrid grad_input(const MaskedGrid& a, const Kernel2D& k, const ConvConfig& cfg,
                      const MaskedGrid& upstream);

}  // namespace stpconv
