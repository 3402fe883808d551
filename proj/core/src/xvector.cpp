#include "stpconv/xvector.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace stpconv {

namespace {

void check_entries(const std::vector<double>& entries) {
  if (entries.empty()) throw ShapeError("XVector: dimension must be >= 1");
  for (double v : entries) {
    if (!std::isfinite(v)) throw ShapeError("XVector: entries must be finite");
  }
}

}  // namespace

XVector::XVector(std::vector<double> entries) : entries_(std::move(entries)) {
  check_entries(entries_);
}

XVector::XVector(std::initializer_list<double> entries) : entries_(entries) {
  check_entries(entries_);
}

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (b != 0 && q > UINT64_MAX / b)
    throw std::overflow_error("lcm overflows 64-bit range");
  return q * b;
}

XVector stretch(const XVector& x, std::size_t k) {
  if (k == 0) throw ShapeError("stretch: factor must be >= 1");
  std::vector<double> out;
  out.reserve(x.dim() * k);
  for (std::size_t i = 0; i < x.dim(); ++i)
    out.insert(out.end(), k, x[i]);
  return XVector(std::move(out));
}

namespace {

template <class Op>
XVector combine(const XVector& x, const XVector& y, Op op) {
  const std::uint64_t t = lcm_checked(x.dim(), y.dim());
  const std::size_t kx = static_cast<std::size_t>(t / x.dim());
  const std::size_t ky = static_cast<std::size_t>(t / y.dim());
  std::vector<double> out(static_cast<std::size_t>(t));
  for (std::size_t p = 0; p < out.size(); ++p)
    out[p] = op(x[p / kx], y[p / ky]);
  return XVector(std::move(out));
}

}  // namespace

XVector vadd(const XVector& x, const XVector& y) {
  return combine(x, y, [](double a, double b) { return a + b; });
}

XVector vsub(const XVector& x, const XVector& y) {
  return combine(x, y, [](double a, double b) { return a - b; });
}

double stp_inner(const XVector& x, const XVector& y) {
  const std::size_t m = x.dim(), n = y.dim();
  double acc = 0.0;
  for_each_overlap(m, n, [&](std::size_t i, std::size_t j, std::uint64_t len) {
    acc += x[i] * y[j] * static_cast<double>(len);
  });
  return acc / (static_cast<double>(m) * static_cast<double>(n));
}

double xnorm(const XVector& x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) acc += x[i] * x[i];
  return std::sqrt(acc / static_cast<double>(x.dim()));
}

double xdist(const XVector& x, const XVector& y) {
  const std::size_t m = x.dim(), n = y.dim();
  double acc = 0.0;
  for_each_overlap(m, n, [&](std::size_t i, std::size_t j, std::uint64_t len) {
    const double d = x[i] - y[j];
    acc += d * d * static_cast<double>(len);
  });
  return std::sqrt(acc / (static_cast<double>(m) * static_cast<double>(n)));
}

bool equivalent(const XVector& x, const XVector& y, double tol) {
  bool eq = true;
  for_each_overlap(x.dim(), y.dim(),
                   [&](std::size_t i, std::size_t j, std::uint64_t) {
                     if (std::abs(x[i] - y[j]) > tol) eq = false;
                   });
  return eq;
}

EquivClass canonicalize(const XVector& x) {
  const std::size_t m = x.dim();
  for (std::size_t p = 1; p <= m; ++p) {
    if (m % p != 0) continue;
    const std::size_t block = m / p;
    bool periodic = true;
    for (std::size_t i = 0; i < p && periodic; ++i) {
      const double v = x[i * block];
      for (std::size_t r = 1; r < block; ++r) {
        if (x[i * block + r] != v) {
          periodic = false;
          break;
        }
      }
    }
    if (periodic) {
      std::vector<double> out(p);
      for (std::size_t i = 0; i < p; ++i) out[i] = x[i * block];
      return EquivClass{XVector(std::move(out))};
    }
  }
  return EquivClass{x};  // unreachable: p == m always matches
}

}  // namespace stpconv
