#include "stpconv/cubic.hpp"

#include <utility>

#include "stpconv/conv.hpp"

namespace stpconv {

CubicWindowCounts cubic_window_counts(const MaskedCube& a, const CubicConfig& cfg) {
  if (cfg.pad_depth % 2 != 0)
    throw ShapeError("depth: total padding must be even (split across both sides)");
  return {window_count(a.rows() + 2 * cfg.pad_v, cfg.rf_rows, cfg.stride_v, "vertical"),
          window_count(a.cols() + 2 * cfg.pad_h, cfg.rf_cols, cfg.stride_h, "horizontal"),
          window_count(a.depth() + cfg.pad_depth, cfg.rf_depth, cfg.stride_depth, "depth")};
}

MaskedGrid matricize(const MaskedCube& a) {
  MaskedGrid out(a.depth() * a.rows(), a.cols());
  for (std::size_t k = 0; k < a.depth(); ++k)
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        out.at(k * a.rows() + r, c) = a.slice(k).at(r, c);
  return out;
}

MaskedCube dematricize(const MaskedGrid& m, std::size_t depth) {
  if (depth == 0 || m.rows() % depth != 0)
    throw ShapeError("dematricize: rows not divisible by depth");
  const std::size_t rows = m.rows() / depth;
  std::vector<MaskedGrid> slices;
  slices.reserve(depth);
  for (std::size_t k = 0; k < depth; ++k) slices.push_back(m.sub(k * rows, 0, rows, m.cols()));
  return MaskedCube(std::move(slices));
}

MaskedCube enlarge_cube(const MaskedCube& a, const CubicConfig& cfg) {
  if (cfg.pad_depth % 2 != 0)
    throw ShapeError("depth: total padding must be even (split across both sides)");
  const std::size_t per_side = cfg.pad_depth / 2;
  std::vector<MaskedGrid> slices;
  slices.reserve(a.depth() + cfg.pad_depth);
  const MaskedGrid blank(a.rows() + 2 * cfg.pad_v, a.cols() + 2 * cfg.pad_h);
  for (std::size_t k = 0; k < per_side; ++k) slices.push_back(blank);
  for (std::size_t k = 0; k < a.depth(); ++k)
    slices.push_back(enlarge(a.slice(k), cfg.pad_v, cfg.pad_h, Fill::undefined));
  for (std::size_t k = 0; k < per_side; ++k) slices.push_back(blank);
  return MaskedCube(std::move(slices));
}

PsiMatrix::PsiMatrix(MaskedGrid flat, std::size_t n_v, std::size_t n_z, std::size_t n_h,
                     std::size_t s, std::size_t t, std::size_t xi)
    : flat_(std::move(flat)), n_v_(n_v), n_z_(n_z), n_h_(n_h), s_(s), t_(t), xi_(xi) {
  if (flat_.rows() != n_v * n_z * xi * s || flat_.cols() != n_h * t)
    throw ShapeError("PsiMatrix: flat dimensions disagree with the block layout");
}

MaskedGrid PsiMatrix::block(std::size_t i, std::size_t j) const {
  if (i >= block_rows() || j >= block_cols())
    throw ShapeError("PsiMatrix::block: index out of range");
  return flat_.sub(i * xi_ * s_, j * t_, xi_ * s_, t_);
}

PsiMatrix build_psi(const MaskedCube& a, const CubicConfig& cfg) {
  const CubicWindowCounts counts = cubic_window_counts(a, cfg);
  const std::size_t nv = counts.vertical, nh = counts.horizontal, nz = counts.depth;
  const MaskedCube abar = enlarge_cube(a, cfg);
  const std::size_t s = cfg.rf_rows, t = cfg.rf_cols, xi = cfg.rf_depth;

  MaskedGrid flat(nv * nz * xi * s, nh * t);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t z = 0; z < nz; ++z) {
      const std::size_t block_row = v * nz + z;
      for (std::size_t h = 0; h < nh; ++h) {
        for (std::size_t jz = 0; jz < xi; ++jz) {
          const MaskedGrid& slice = abar.slice(z * cfg.stride_depth + jz);
          for (std::size_t r = 0; r < s; ++r) {
            for (std::size_t c = 0; c < t; ++c) {
              flat.at(block_row * xi * s + jz * s + r, h * t + c) =
                  slice.at(v * cfg.stride_v + r, h * cfg.stride_h + c);
            }
          }
        }
      }
    }
  }
  return PsiMatrix(std::move(flat), nv, nz, nh, s, t, xi);
}

PsiMatrix build_psi_chain(const MaskedCube& a, const CubicConfig& cfg) {
  const auto counts = cubic_window_counts(a, cfg);
  const std::size_t nv = counts.vertical, nh = counts.horizontal, nz = counts.depth;
  const MaskedCube abar = enlarge_cube(a, cfg);
  const std::size_t s = cfg.rf_rows, t = cfg.rf_cols, xi_d = cfg.rf_depth;
  const std::size_t delta = abar.depth();

  // per-slice receptive-field matrices, stacked depth-major
  const SelectorMatrix p = xi(nv, s, cfg.stride_v).transpose();
  const SelectorMatrix q = xi(nh, t, cfg.stride_h);
  MaskedGrid stacked(delta * nv * s, nh * t);
  for (std::size_t k = 0; k < delta; ++k) {
    const MaskedGrid rk = q.apply_right(p.apply_left(abar.slice(k)));
    for (std::size_t r = 0; r < rk.rows(); ++r)
      for (std::size_t c = 0; c < rk.cols(); ++c) stacked.at(k * nv * s + r, c) = rk.at(r, c);
  }

  // reorder rows from (slice, window, offset) to (window, slice, offset),
  // then select depth windows within each spatial window
  const SelectorMatrix reorder = kron(swap_matrix(delta, nv), SelectorMatrix::identity(s));
  const SelectorMatrix depth_select =
      kron(kron(SelectorMatrix::identity(nv), xi(nz, xi_d, cfg.stride_depth).transpose()),
           SelectorMatrix::identity(s));
  MaskedGrid flat = depth_select.apply_left(reorder.apply_left(stacked));
  return PsiMatrix(std::move(flat), nv, nz, nh, s, t, xi_d);
}

MaskedGrid stp_conv3d(const MaskedCube& a, const MaskedGrid& kernel, const CubicConfig& cfg) {
  if (kernel.rows() != cfg.rf_depth * cfg.rf_rows || kernel.cols() != cfg.rf_cols)
    throw ShapeError("stp_conv3d: kernel must be the slice-stacked (rf_depth*rf_rows) x rf_cols matrix");
  const Kernel2D k(kernel);  // validates full definedness, caches the vector

  const PsiMatrix psi = build_psi(a, cfg);
  MaskedGrid out(psi.block_rows(), psi.block_cols());
  for (std::size_t i = 0; i < psi.block_rows(); ++i) {
    for (std::size_t j = 0; j < psi.block_cols(); ++j) {
      if (const auto avail = available_vector(psi.block(i, j)))
        out.at(i, j) = stp_inner(*avail, k.vec());
    }
  }
  return out;
}

}  // namespace stpconv
