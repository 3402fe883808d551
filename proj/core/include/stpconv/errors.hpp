#pragma once

#include <stdexcept>
#include <string>

namespace stpconv {

/// Shape, stride, or precondition violation (bad dimensions, unsolvable
/// stride equations, invalid selector structure).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input data (CSV/JSON syntax, non-finite numbers, ragged rows).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, unwritable output).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace stpconv
