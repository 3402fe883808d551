#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "stpconv/errors.hpp"

namespace stpconv {

/// A finite real vector of arbitrary positive dimension. Vectors of unequal
/// dimension combine by repeating each entry k times ("stretching") up to the
/// least common multiple of the two dimensions.
class XVector {
 public:
  explicit XVector(std::vector<double> entries);
  XVector(std::initializer_list<double> entries);

  std::size_t dim() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& entries() const { return entries_; }

  bool operator==(const XVector& other) const = default;

 private:
  std::vector<double> entries_;
};

/// Shortest representative of an equivalence class: no proper divisor p of
/// canonical.dim() yields the same vector when its length-p prefix is
/// stretched back up.
struct EquivClass {
  XVector canonical;
};

/// Each entry of x repeated k times, order preserved.
XVector stretch(const XVector& x, std::size_t k);

XVector vadd(const XVector& x, const XVector& y);
XVector vsub(const XVector& x, const XVector& y);

/// Dimension-free inner product: (1/t) * <stretch(x, t/m), stretch(y, t/n)>
/// with t = lcm(m, n). Evaluated by an O(m+n) interval-overlap merge; the
/// length-t expansions are never materialized.
double stp_inner(const XVector& x, const XVector& y);

double xnorm(const XVector& x);

/// Pseudo-distance: norm of the stretched difference. Zero exactly on
/// equivalent vectors.
double xdist(const XVector& x, const XVector& y);

/// True when the stretched representatives agree entrywise within tol.
bool equivalent(const XVector& x, const XVector& y, double tol = 1e-9);

/// Shortest equivalent representative; its dimension divides x.dim().
/// Period detection uses exact entry equality.
EquivClass canonicalize(const XVector& x);

/// Least common multiple in exact integer arithmetic; throws
/// std::overflow_error instead of wrapping.
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

/// Visits every overlapping pair of stretched entries of an m-vector and an
/// n-vector. Entry i of x covers [(i)*n, (i+1)*n) and entry j of y covers
/// [(j)*m, (j+1)*m) in units of 1/(m*n); visit(i, j, len) receives the exact
/// integer overlap length. Segments arrive in increasing order.
template <class F>
void for_each_overlap(std::size_t m, std::size_t n, F&& visit) {
  if (m == 0 || n == 0) throw ShapeError("for_each_overlap: zero dimension");
  const auto m64 = static_cast<std::uint64_t>(m);
  const auto n64 = static_cast<std::uint64_t>(n);
  if (m64 > UINT64_MAX / n64)
    throw std::overflow_error("for_each_overlap: m*n overflows 64-bit range");

  std::uint64_t prev = 0;
  std::uint64_t x_end = n64;
  std::uint64_t y_end = m64;
  std::size_t i = 0, j = 0;
  while (i < m && j < n) {
    const std::uint64_t next = x_end < y_end ? x_end : y_end;
    visit(i, j, next - prev);
    if (x_end == next) {
      ++i;
      x_end += n64;
    }
    if (y_end == next) {
      ++j;
      y_end += m64;
    }
    prev = next;
  }
}

}  // namespace stpconv
