#include "stpconv/jobs.hpp"

#include "stpconv/conv.hpp"
#include "stpconv/cubic.hpp"
#include "stpconv/grid.hpp"
#include "stpconv/io.hpp"

namespace stpconv {

namespace {

bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json";
}

MaskedGrid load_grid(const std::string& path) {
  const std::string text = io::read_file(path);
  return is_json_path(path) ? io::read_grid_json(text) : io::read_grid_csv(text);
}

MaskedCube load_cube(const std::string& path) {
  const std::string text = io::read_file(path);
  return is_json_path(path) ? io::read_cube_json(text) : io::read_cube_csv(text);
}

std::vector<Cell> load_signal(const std::string& path) {
  const std::string text = io::read_file(path);
  return is_json_path(path) ? io::read_signal_json(text) : io::read_signal_csv(text);
}

FiniteSignal load_finite_signal(const std::string& path) {
  const std::string text = io::read_file(path);
  return is_json_path(path) ? io::read_finite_signal_json(text)
                            : io::read_finite_signal_csv(text);
}

void apply_mask(MaskedGrid& g, const MaskedGrid& mask) {
  if (mask.rows() != g.rows() || mask.cols() != g.cols())
    throw ShapeError("mask: dimensions " + std::to_string(mask.rows()) + "x" +
                     std::to_string(mask.cols()) + " do not match input " +
                     std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (!mask.defined(r, c) || mask.value(r, c) == 0.0) g.at(r, c) = std::nullopt;
}

XVector signal_kernel(const std::vector<Cell>& k) {
  std::vector<double> vals;
  for (const Cell& c : k) {
    if (!c) throw ShapeError("kernel: must be fully defined");
    vals.push_back(*c);
  }
  return XVector(std::move(vals));
}

std::size_t rf_or(const std::optional<std::size_t>& flag, std::size_t fallback,
                  const char* axis) {
  if (!flag) return fallback;
  if (*flag == 0) throw ShapeError(std::string(axis) + ": receptive field must be >= 1");
  return *flag;
}

}  // namespace

std::string run(const JobSpec& job) {
  std::string artifact;

  switch (job.mode) {
    case JobMode::classical2d:
    case JobMode::stp2d: {
      MaskedGrid input = load_grid(job.input_path);
      if (!job.mask_path.empty()) apply_mask(input, load_grid(job.mask_path));
      const Kernel2D kernel(load_grid(job.kernel_path));
      ConvConfig cfg;
      cfg.mode = job.mode == JobMode::classical2d ? ConvMode::classical : ConvMode::stp;
      cfg.pad_v = job.pad_v;
      cfg.pad_h = job.pad_h;
      cfg.stride_v = job.stride_v;
      cfg.stride_h = job.stride_h;
      cfg.rf_rows = rf_or(job.rf_rows, kernel.rows(), "rf_rows");
      cfg.rf_cols = rf_or(job.rf_cols, kernel.cols(), "rf_cols");
      const MaskedGrid out = cfg.mode == ConvMode::classical
                                 ? classical_conv2d(input, kernel, cfg)
                                 : stp_conv2d(input, kernel, cfg);
      artifact = job.format == OutputFormat::csv ? io::write_grid_csv(out)
                                                 : io::write_grid_json(out);
      break;
    }
    case JobMode::stp1d: {
      std::vector<Cell> input = load_signal(job.input_path);
      if (!job.mask_path.empty()) {
        const std::vector<Cell> mask = load_signal(job.mask_path);
        if (mask.size() != input.size())
          throw ShapeError("mask: length " + std::to_string(mask.size()) +
                           " does not match signal length " + std::to_string(input.size()));
        for (std::size_t i = 0; i < input.size(); ++i)
          if (!mask[i] || *mask[i] == 0.0) input[i] = std::nullopt;
      }
      const XVector kernel = signal_kernel(load_signal(job.kernel_path));
      Conv1dConfig cfg;
      cfg.pad = job.pad_h;
      cfg.stride = job.stride_h;
      cfg.window = rf_or(job.rf_cols, kernel.dim(), "rf_cols");
      const std::vector<Cell> out = stp_conv1d(input, kernel, cfg);
      artifact = job.format == OutputFormat::csv ? io::write_signal_csv(out)
                                                 : io::write_signal_json(out);
      break;
    }
    case JobMode::stp3d: {
      const MaskedCube input = [&] {
        MaskedCube cube = load_cube(job.input_path);
        if (job.mask_path.empty()) return cube;
        const MaskedCube mask = load_cube(job.mask_path);
        if (mask.depth() != cube.depth())
          throw ShapeError("mask: depth " + std::to_string(mask.depth()) +
                           " does not match input depth " + std::to_string(cube.depth()));
        std::vector<MaskedGrid> slices;
        for (std::size_t k = 0; k < cube.depth(); ++k) {
          MaskedGrid s = cube.slice(k);
          apply_mask(s, mask.slice(k));
          slices.push_back(std::move(s));
        }
        return MaskedCube(std::move(slices));
      }();
      const MaskedCube kernel_cube = load_cube(job.kernel_path);
      const MaskedGrid kernel = matricize(kernel_cube);
      CubicConfig cfg;
      cfg.pad_v = job.pad_v;
      cfg.pad_h = job.pad_h;
      cfg.pad_depth = job.pad_depth;
      cfg.stride_v = job.stride_v;
      cfg.stride_h = job.stride_h;
      cfg.stride_depth = job.stride_depth;
      cfg.rf_rows = rf_or(job.rf_rows, kernel_cube.rows(), "rf_rows");
      cfg.rf_cols = rf_or(job.rf_cols, kernel_cube.cols(), "rf_cols");
      cfg.rf_depth = rf_or(job.rf_depth, kernel_cube.depth(), "rf_depth");
      if (cfg.rf_rows != kernel_cube.rows() || cfg.rf_cols != kernel_cube.cols() ||
          cfg.rf_depth != kernel_cube.depth())
        throw ShapeError("stp3d: receptive field must equal the kernel dimensions");
      const MaskedGrid out = stp_conv3d(input, kernel, cfg);
      artifact = job.format == OutputFormat::csv ? io::write_grid_csv(out)
                                                 : io::write_grid_json(out);
      break;
    }
    case JobMode::domain1d: {
      if (!job.mask_path.empty())
        throw ShapeError("domain1d: masks are not applicable, the support is the domain");
      const FiniteSignal f = load_finite_signal(job.input_path);
      const FiniteSignal w = load_finite_signal(job.kernel_path);
      const FiniteSignal out = domain_conv1d(f, w);
      artifact = job.format == OutputFormat::csv ? io::write_finite_signal_csv(out)
                                                 : io::write_finite_signal_json(out);
      break;
    }
  }

  if (!job.output_path.empty()) io::write_file(job.output_path, artifact);
  return artifact;
}

}  // namespace stpconv
