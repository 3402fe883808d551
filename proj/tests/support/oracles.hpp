// Test-only reference implementations, independent of the library's
// evaluation paths: literal lcm expansions, brute-force window gathers, and
// double-loop convolutions. Deliberately slow and simple.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "stpconv/conv.hpp"
#include "stpconv/grid.hpp"
#include "stpconv/xvector.hpp"

namespace oracles {

using stpconv::Cell;
using stpconv::MaskedGrid;
using stpconv::XVector;

inline std::vector<double> expand(const XVector& x, std::size_t t) {
  std::vector<double> out;
  const std::size_t k = t / x.dim();
  for (std::size_t i = 0; i < x.dim(); ++i)
    out.insert(out.end(), k, x[i]);
  return out;
}

/// Inner product by materializing both lcm expansions.
inline double stp_inner_expansion(const XVector& x, const XVector& y) {
  const std::uint64_t t = std::lcm<std::uint64_t>(x.dim(), y.dim());
  const auto xe = expand(x, static_cast<std::size_t>(t));
  const auto ye = expand(y, static_cast<std::size_t>(t));
  double acc = 0.0;
  for (std::size_t i = 0; i < xe.size(); ++i) acc += xe[i] * ye[i];
  return acc / static_cast<double>(t);
}

inline XVector vadd_expansion(const XVector& x, const XVector& y) {
  const std::uint64_t t = std::lcm<std::uint64_t>(x.dim(), y.dim());
  const auto xe = expand(x, static_cast<std::size_t>(t));
  const auto ye = expand(y, static_cast<std::size_t>(t));
  std::vector<double> out(xe.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = xe[i] + ye[i];
  return XVector(out);
}

/// Receptive-field block matrix assembled by plain index arithmetic.
inline MaskedGrid rfm_gather(const MaskedGrid& abar, std::size_t s, std::size_t t,
                             std::size_t dv, std::size_t dh) {
  const std::size_t sv = (abar.rows() - s) / dv + 1;
  const std::size_t sh = (abar.cols() - t) / dh + 1;
  MaskedGrid out(sv * s, sh * t);
  for (std::size_t i = 0; i < sv; ++i)
    for (std::size_t j = 0; j < sh; ++j)
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < t; ++c)
          out.at(i * s + r, j * t + c) = abar.at(i * dv + r, j * dh + c);
  return out;
}

/// Brute-force double loop over both supports.
inline stpconv::FiniteSignal conv1d_brute(const stpconv::FiniteSignal& f,
                                          const stpconv::FiniteSignal& k) {
  std::map<long long, double> out;
  for (const auto& [nf, vf] : f.points())
    for (const auto& [nk, vk] : k.points()) out[nf + nk] += vf * vk;
  return stpconv::FiniteSignal(out);
}

/// Central finite difference of a scalar function of one coordinate.
template <class F>
double central_difference(F&& eval, double base, double step = 1e-6) {
  const double hi = eval(base + step);
  const double lo = eval(base - step);
  return (hi - lo) / (2.0 * step);
}

inline double rel_error(double got, double want) {
  const double scale = std::max({std::abs(got), std::abs(want), 1e-8});
  return std::abs(got - want) / scale;
}

}  // namespace oracles
