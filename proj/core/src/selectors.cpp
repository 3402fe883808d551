#include "stpconv/selectors.hpp"

#include <string>

namespace stpconv {

SelectorMatrix::SelectorMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw ShapeError("SelectorMatrix: dimensions must be >= 1");
}

SelectorMatrix SelectorMatrix::identity(std::size_t n) {
  SelectorMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

SelectorMatrix SelectorMatrix::transpose() const {
  SelectorMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c)) out.set(c, r, true);
  return out;
}

std::size_t SelectorMatrix::row_sum(std::size_t r) const {
  std::size_t n = 0;
  for (std::size_t c = 0; c < cols_; ++c) n += at(r, c) ? 1 : 0;
  return n;
}

std::size_t SelectorMatrix::col_sum(std::size_t c) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r) n += at(r, c) ? 1 : 0;
  return n;
}

MaskedGrid SelectorMatrix::apply_left(const MaskedGrid& g) const {
  if (cols_ != g.rows())
    throw ShapeError("apply_left: selector has " + std::to_string(cols_) +
                     " columns but grid has " + std::to_string(g.rows()) + " rows");
  MaskedGrid out(rows_, g.cols());
  for (std::size_t r = 0; r < rows_; ++r) {
    std::size_t src = 0, count = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c)) {
        src = c;
        ++count;
      }
    }
    if (count != 1)
      throw ShapeError("apply_left: selector row " + std::to_string(r) +
                       " is not a single-source selection");
    for (std::size_t c = 0; c < g.cols(); ++c) out.at(r, c) = g.at(src, c);
  }
  return out;
}

MaskedGrid SelectorMatrix::apply_right(const MaskedGrid& g) const {
  if (rows_ != g.cols())
    throw ShapeError("apply_right: selector has " + std::to_string(rows_) +
                     " rows but grid has " + std::to_string(g.cols()) + " columns");
  MaskedGrid out(g.rows(), cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t src = 0, count = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (at(r, c)) {
        src = r;
        ++count;
      }
    }
    if (count != 1)
      throw ShapeError("apply_right: selector column " + std::to_string(c) +
                       " is not a single-source selection");
    for (std::size_t r = 0; r < g.rows(); ++r) out.at(r, c) = g.at(r, src);
  }
  return out;
}

SelectorMatrix SelectorMatrix::multiply(const SelectorMatrix& other) const {
  if (cols_ != other.rows())
    throw ShapeError("multiply: inner dimensions disagree");
  SelectorMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < other.cols_; ++c) {
      std::size_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k)
        if (at(r, k) && other.at(k, c)) ++acc;
      if (acc > 1)
        throw ShapeError("multiply: product entry exceeds 1, result is not a 0/1 matrix");
      out.set(r, c, acc == 1);
    }
  }
  return out;
}

SelectorMatrix kron(const SelectorMatrix& a, const SelectorMatrix& b) {
  SelectorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca)
      if (a.at(ra, ca))
        for (std::size_t rb = 0; rb < b.rows(); ++rb)
          for (std::size_t cb = 0; cb < b.cols(); ++cb)
            if (b.at(rb, cb)) out.set(ra * b.rows() + rb, ca * b.cols() + cb, true);
  return out;
}

SelectorMatrix xi(std::size_t n, std::size_t eta, std::size_t d) {
  if (n < 1) throw ShapeError("xi: window count must be >= 1");
  if (d < 1 || d > eta)
    throw ShapeError("xi: stride d must satisfy 0 < d <= eta (d = " + std::to_string(d) +
                     ", eta = " + std::to_string(eta) + ")");
  SelectorMatrix out((n - 1) * d + eta, n * eta);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < eta; ++r) out.set(i * d + r, i * eta + r, true);
  return out;
}

SelectorMatrix swap_matrix(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw ShapeError("swap_matrix: dimensions must be >= 1");
  SelectorMatrix out(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.set(j * m + i, i * n + j, true);
  return out;
}

MaskedGrid rfm_2d(const MaskedGrid& abar, std::size_t s, std::size_t t,
                  std::size_t dv, std::size_t dh) {
  const std::size_t sv = window_count(abar.rows(), s, dv, "vertical");
  const std::size_t sh = window_count(abar.cols(), t, dh, "horizontal");
  const SelectorMatrix p = xi(sv, s, dv).transpose();
  const SelectorMatrix q = xi(sh, t, dh);
  return q.apply_right(p.apply_left(abar));
}

MaskedGrid tile(const MaskedGrid& g, std::size_t reps_v, std::size_t reps_h) {
  if (reps_v == 0 || reps_h == 0) throw ShapeError("tile: repetitions must be >= 1");
  MaskedGrid out(g.rows() * reps_v, g.cols() * reps_h);
  for (std::size_t br = 0; br < reps_v; ++br)
    for (std::size_t bc = 0; bc < reps_h; ++bc)
      for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
          out.at(br * g.rows() + r, bc * g.cols() + c) = g.at(r, c);
  return out;
}

}  // namespace stpconv
