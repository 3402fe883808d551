#include "stpconv/conv.hpp"

#include <cmath>
#include <utility>

namespace stpconv {

Kernel2D::Kernel2D(MaskedGrid grid)
    : grid_(std::move(grid)),
      vec_([&] {
        auto v = available_vector(grid_);
        if (!v || v->dim() != grid_.rows() * grid_.cols())
          throw ShapeError("Kernel2D: kernel must be fully defined");
        return *v;
      }()) {}

MaskedGrid classical_conv2d(const MaskedGrid& a, const Kernel2D& k, const ConvConfig& cfg) {
  if (cfg.mode != ConvMode::classical)
    throw ShapeError("classical_conv2d: config mode must be classical");
  if (cfg.rf_rows != k.rows() || cfg.rf_cols != k.cols())
    throw ShapeError("classical_conv2d: receptive field must equal kernel size");
  if (!a.fully_defined())
    throw ShapeError("classical_conv2d: input must be fully defined");

  const MaskedGrid abar = enlarge(a, cfg.pad_v, cfg.pad_h, Fill::zero);
  const auto [sv, sh] = window_counts(a, cfg);
  MaskedGrid out(sv, sh);
  for (std::size_t i = 0; i < sv; ++i) {
    for (std::size_t j = 0; j < sh; ++j) {
      double acc = 0.0;
      // column-major traversal, matching the kernel vectorization
      for (std::size_t c = 0; c < k.cols(); ++c)
        for (std::size_t r = 0; r < k.rows(); ++r)
          acc += k.grid().value(r, c) * abar.value(i * cfg.stride_v + r, j * cfg.stride_h + c);
      out.at(i, j) = acc;
    }
  }
  return out;
}

namespace {

Cell block_dot(const MaskedGrid& ba, const MaskedGrid& bb, bool any_mask) {
  if (!any_mask) {
    double acc = 0.0;
    for (std::size_t c = 0; c < ba.cols(); ++c)
      for (std::size_t r = 0; r < ba.rows(); ++r) acc += ba.value(r, c) * bb.value(r, c);
    return acc;
  }
  const bool a_full = ba.fully_defined();
  const bool b_full = bb.fully_defined();
  if (!a_full && !b_full) {
    // both sides masked: positions undefined in either are dropped from both
    std::vector<double> va, vb;
    for (std::size_t c = 0; c < ba.cols(); ++c) {
      for (std::size_t r = 0; r < ba.rows(); ++r) {
        if (ba.defined(r, c) && bb.defined(r, c)) {
          va.push_back(ba.value(r, c));
          vb.push_back(bb.value(r, c));
        }
      }
    }
    if (va.empty()) return std::nullopt;
    return stp_inner(XVector(std::move(va)), XVector(std::move(vb)));
  }
  const auto va = available_vector(ba);
  const auto vb = available_vector(bb);
  if (!va || !vb) return std::nullopt;
  return stp_inner(*va, *vb);
}

}  // namespace

MaskedGrid block_hadamard(const MaskedGrid& a, const MaskedGrid& b,
                          std::size_t block_rows, std::size_t block_cols) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("block_hadamard: operands must have equal size");
  if (block_rows == 0 || block_cols == 0 || a.rows() % block_rows != 0 ||
      a.cols() % block_cols != 0)
    throw ShapeError("block_hadamard: size not divisible by block dimensions");

  const bool any_mask = !a.fully_defined() || !b.fully_defined();
  const std::size_t p = a.rows() / block_rows;
  const std::size_t q = a.cols() / block_cols;
  MaskedGrid out(p, q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const MaskedGrid ba = a.sub(i * block_rows, j * block_cols, block_rows, block_cols);
      const MaskedGrid bb = b.sub(i * block_rows, j * block_cols, block_rows, block_cols);
      out.at(i, j) = block_dot(ba, bb, any_mask);
    }
  }
  return out;
}

MaskedGrid stp_conv2d(const MaskedGrid& a, const Kernel2D& k, const ConvConfig& cfg) {
  if (cfg.mode != ConvMode::stp)
    throw ShapeError("stp_conv2d: config mode must be stp");
  const MaskedGrid abar = enlarge(a, cfg.pad_v, cfg.pad_h, Fill::undefined);
  const auto [sv, sh] = window_counts(a, cfg);
  MaskedGrid out(sv, sh);
  for (std::size_t i = 0; i < sv; ++i) {
    for (std::size_t j = 0; j < sh; ++j) {
      const MaskedGrid w =
          abar.sub(i * cfg.stride_v, j * cfg.stride_h, cfg.rf_rows, cfg.rf_cols);
      if (const auto avail = available_vector(w)) out.at(i, j) = stp_inner(*avail, k.vec());
    }
  }
  return out;
}

std::vector<MaskedGrid> multi_filter_conv(const std::vector<MaskedGrid>& channels,
                                          const std::vector<Kernel2D>& filters,
                                          const ConvConfig& cfg) {
  if (filters.empty()) throw ShapeError("multi_filter_conv: filter list is empty");
  for (const auto& ch : channels) {
    if (ch.rows() != channels[0].rows() || ch.cols() != channels[0].cols())
      throw ShapeError("multi_filter_conv: channels must share dimensions");
  }
  std::vector<MaskedGrid> out;
  out.reserve(channels.size() * filters.size());
  for (const auto& f : filters) {
    for (const auto& ch : channels) {
      out.push_back(cfg.mode == ConvMode::classical ? classical_conv2d(ch, f, cfg)
                                                    : stp_conv2d(ch, f, cfg));
    }
  }
  return out;
}

FiniteSignal::FiniteSignal(std::map<long long, double> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw ShapeError("FiniteSignal: support must be nonempty");
  for (const auto& [n, v] : points_) {
    if (!std::isfinite(v)) throw ShapeError("FiniteSignal: values must be finite");
  }
}

FiniteSignal::FiniteSignal(std::initializer_list<std::pair<const long long, double>> points)
    : FiniteSignal(std::map<long long, double>(points)) {}

double FiniteSignal::at(long long n) const {
  const auto it = points_.find(n);
  return it == points_.end() ? 0.0 : it->second;
}

double FiniteSignal::l1_norm() const {
  double acc = 0.0;
  for (const auto& [n, v] : points_) acc += std::abs(v);
  return acc;
}

FiniteSignal discrete_conv1d(const FiniteSignal& f, const FiniteSignal& k, ConvVariant v) {
  std::map<long long, double> out;
  for (const auto& [nf, vf] : f.points()) {
    for (const auto& [nk, vk] : k.points()) {
      // conv and flipped both place the term at nf + nk; cross-correlation
      // at nf - nk (f sampled at n + tau).
      const long long n = v == ConvVariant::cross_correlation ? nf - nk : nf + nk;
      out[n] += vf * vk;
    }
  }
  return FiniteSignal(std::move(out));
}

FiniteSignal domain_conv1d(const FiniteSignal& f, const FiniteSignal& w) {
  // the sum runs over the domain of f only, which for finite supports is
  // exactly the conv pairing
  return discrete_conv1d(f, w, ConvVariant::conv);
}

std::vector<Cell> stp_conv1d(const std::vector<Cell>& signal, const XVector& kernel,
                             const Conv1dConfig& cfg) {
  if (signal.empty()) throw ShapeError("stp_conv1d: signal is empty");
  std::vector<Cell> padded(signal.size() + 2 * cfg.pad);
  for (std::size_t i = 0; i < signal.size(); ++i) padded[cfg.pad + i] = signal[i];
  const std::size_t count = window_count(padded.size(), cfg.window, cfg.stride, "window");
  std::vector<Cell> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> avail;
    for (std::size_t r = 0; r < cfg.window; ++r) {
      if (const Cell& c = padded[i * cfg.stride + r]) avail.push_back(*c);
    }
    if (!avail.empty()) out[i] = stp_inner(XVector(std::move(avail)), kernel);
  }
  return out;
}

namespace {

// defined cells of a window in column-major order, with their coordinates in
// the unpadded input (padding cells carry no coordinate)
struct WindowEntry {
  double value;
  bool in_input;
  std::size_t r, c;
};

std::vector<WindowEntry> gather_window(const MaskedGrid& a, const ConvConfig& cfg,
                                       std::size_t i, std::size_t j) {
  std::vector<WindowEntry> out;
  for (std::size_t c = 0; c < cfg.rf_cols; ++c) {
    for (std::size_t r = 0; r < cfg.rf_rows; ++r) {
      const std::size_t pr = i * cfg.stride_v + r;  // padded coordinates
      const std::size_t pc = j * cfg.stride_h + c;
      if (pr < cfg.pad_v || pc < cfg.pad_h) continue;
      const std::size_t ar = pr - cfg.pad_v;
      const std::size_t ac = pc - cfg.pad_h;
      if (ar >= a.rows() || ac >= a.cols()) continue;
      if (a.defined(ar, ac)) out.push_back({a.value(ar, ac), true, ar, ac});
    }
  }
  return out;
}

}  // namespace

KernelGradient grad_kernel(const MaskedGrid& a, const Kernel2D& k, const ConvConfig& cfg) {
  if (cfg.mode != ConvMode::stp) throw ShapeError("grad_kernel: config mode must be stp");
  const auto [sv, sh] = window_counts(a, cfg);
  const std::size_t kn = k.rows() * k.cols();
  KernelGradient grad;
  grad.out_rows = sv;
  grad.out_cols = sh;
  grad.per_cell.reserve(sv * sh);
  for (std::size_t i = 0; i < sv; ++i) {
    for (std::size_t j = 0; j < sh; ++j) {
      MaskedGrid g(k.rows(), k.cols(), 0.0);
      const auto entries = gather_window(a, cfg, i, j);
      if (!entries.empty()) {
        const std::size_t m = entries.size();
        const double denom = static_cast<double>(m) * static_cast<double>(kn);
        for_each_overlap(m, kn, [&](std::size_t p, std::size_t q, std::uint64_t len) {
          // q indexes the column-major kernel vectorization
          const std::size_t kc = q / k.rows();
          const std::size_t kr = q % k.rows();
          *g.at(kr, kc) += entries[p].value * static_cast<double>(len) / denom;
        });
      }
      grad.per_cell.push_back(std::move(g));
    }
  }
  return grad;
}

MaskedGrid grad_input(const MaskedGrid& a, const Kernel2D& k, const ConvConfig& cfg,
                      const MaskedGrid& upstream) {
  if (cfg.mode != ConvMode::stp) throw ShapeError("grad_input: config mode must be stp");
  const auto [sv, sh] = window_counts(a, cfg);
  if (upstream.rows() != sv || upstream.cols() != sh)
    throw ShapeError("grad_input: upstream shape must match the output shape");

  MaskedGrid grad(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a.defined(r, c)) grad.at(r, c) = 0.0;

  const std::size_t kn = k.rows() * k.cols();
  for (std::size_t i = 0; i < sv; ++i) {
    for (std::size_t j = 0; j < sh; ++j) {
      if (!upstream.defined(i, j)) continue;
      const double u = upstream.value(i, j);
      const auto entries = gather_window(a, cfg, i, j);
      if (entries.empty()) continue;
      const std::size_t m = entries.size();
      const double denom = static_cast<double>(m) * static_cast<double>(kn);
      for_each_overlap(m, kn, [&](std::size_t p, std::size_t q, std::uint64_t len) {
        *grad.at(entries[p].r, entries[p].c) +=
            u * k.vec()[q] * static_cast<double>(len) / denom;
      });
    }
  }
  return grad;
}

}  // namespace stpconv
