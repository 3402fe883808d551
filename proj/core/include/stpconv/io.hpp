#pragma once

#include <string>
#include <vector>

#include "stpconv/conv.hpp"
#include "stpconv/grid.hpp"

namespace stpconv::io {

/// Up to 12 significant digits, locale-independent, byte-stable.
std::string format_number(double v);

// CSV dialect: comma separated, '.' decimal point, literal token `x` for an
// undefined cell, no header row, one line per grid row. 3D data uses one
// 2D block per slice, slices separated by a blank line. Finite signals use
// two columns per line: index,value.

MaskedGrid read_grid_csv(const std::string& text);
std::string write_grid_csv(const MaskedGrid& g);

MaskedCube read_cube_csv(const std::string& text);

std::vector<Cell> read_signal_csv(const std::string& text);
std::string write_signal_csv(const std::vector<Cell>& signal);

FiniteSignal read_finite_signal_csv(const std::string& text);
std::string write_finite_signal_csv(const FiniteSignal& s);

// JSON equivalents: a 2D grid is an array of arrays with null for undefined
// cells; a cube is {"slices": [...]} front to back; a masked 1D signal is a
// flat array; a finite signal is {"support": [...], "values": [...]}.
// Writers emit numbers through format_number so CSV and JSON agree digit
// for digit.

MaskedGrid read_grid_json(const std::string& text);
std::string write_grid_json(const MaskedGrid& g);

MaskedCube read_cube_json(const std::string& text);

std::vector<Cell> read_signal_json(const std::string& text);
std::string write_signal_json(const std::vector<Cell>& signal);

FiniteSignal read_finite_signal_json(const std::string& text);
std::string write_finite_signal_json(const FiniteSignal& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace stpconv::io
