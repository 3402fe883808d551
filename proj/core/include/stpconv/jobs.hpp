#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace stpconv {

enum class JobMode { classical2d, stp1d, stp2d, stp3d, domain1d };
enum class OutputFormat { csv, json };

/// One convolution job: inputs, geometry, output destination. Receptive
/// field dimensions default to the kernel dimensions when unset. Files
/// ending in .json are parsed as JSON, everything else as CSV.
struct JobSpec {
  JobMode mode = JobMode::stp2d;
  std::string input_path;
  std::string kernel_path;
  std::string mask_path;    // optional; 0 or x marks a cell as undefined
  std::string output_path;  // empty: caller prints the returned artifact
  OutputFormat format = OutputFormat::csv;

  std::size_t pad_v = 0, pad_h = 0, pad_depth = 0;
  std::size_t stride_v = 1, stride_h = 1, stride_depth = 1;
  std::optional<std::size_t> rf_rows, rf_cols, rf_depth;
};

/// Executes the job and returns the serialized result; also writes it to
/// output_path when set. Throws ParseError, ShapeError, or IoError.
std::string run(const JobSpec& job);

}  // namespace stpconv
