#include "stpconv/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace stpconv::io {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& token, const char* what) {
  const std::string t = trim(token);
  if (t.empty()) throw ParseError(std::string(what) + ": empty numeric token");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    throw ParseError(std::string(what) + ": bad numeric token '" + t + "'");
  return v;
}

Cell parse_cell(const std::string& token, const char* what) {
  const std::string t = trim(token);
  if (t == "x" || t == "X") return std::nullopt;
  return parse_double(t, what);
}

long long parse_index(const std::string& token, const char* what) {
  const std::string t = trim(token);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
    throw ParseError(std::string(what) + ": bad integer index '" + t + "'");
  return v;
}

std::vector<std::vector<Cell>> parse_block(const std::vector<std::string>& lines,
                                           const char* what) {
  std::vector<std::vector<Cell>> rows;
  for (const auto& line : lines) {
    std::vector<Cell> row;
    for (const auto& token : split(line, ',')) row.push_back(parse_cell(token, what));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(std::string(what) + ": no data rows");
  for (const auto& row : rows) {
    if (row.size() != rows[0].size())
      throw ParseError(std::string(what) + ": ragged rows (expected " +
                       std::to_string(rows[0].size()) + " columns)");
  }
  return rows;
}

MaskedGrid to_grid(const std::vector<std::vector<Cell>>& rows) {
  MaskedGrid g(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) g.at(r, c) = rows[r][c];
  return g;
}

std::vector<std::vector<std::string>> split_blocks(const std::string& text) {
  std::vector<std::vector<std::string>> blocks(1);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
    } else {
      blocks.back().push_back(line);
    }
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

MaskedGrid read_grid_csv(const std::string& text) {
  const auto blocks = split_blocks(text);
  if (blocks.empty()) throw ParseError("grid: no data rows");
  if (blocks.size() > 1) throw ParseError("grid: unexpected blank-line separated blocks");
  return to_grid(parse_block(blocks[0], "grid"));
}

std::string write_grid_csv(const MaskedGrid& g) {
  std::string out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out += ',';
      out += g.defined(r, c) ? format_number(g.value(r, c)) : "x";
    }
    out += '\n';
  }
  return out;
}

MaskedCube read_cube_csv(const std::string& text) {
  const auto blocks = split_blocks(text);
  if (blocks.empty()) throw ParseError("cube: no data rows");
  std::vector<MaskedGrid> slices;
  slices.reserve(blocks.size());
  for (const auto& b : blocks) slices.push_back(to_grid(parse_block(b, "cube slice")));
  try {
    return MaskedCube(std::move(slices));
  } catch (const ShapeError& e) {
    throw ParseError(std::string("cube: ") + e.what());
  }
}

std::vector<Cell> read_signal_csv(const std::string& text) {
  const MaskedGrid g = read_grid_csv(text);
  std::vector<Cell> out;
  if (g.rows() == 1) {
    for (std::size_t c = 0; c < g.cols(); ++c) out.push_back(g.at(0, c));
  } else if (g.cols() == 1) {
    for (std::size_t r = 0; r < g.rows(); ++r) out.push_back(g.at(r, 0));
  } else {
    throw ParseError("signal: expected a single row or single column");
  }
  return out;
}

std::string write_signal_csv(const std::vector<Cell>& signal) {
  std::string out;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    if (i) out += ',';
    out += signal[i] ? format_number(*signal[i]) : "x";
  }
  out += '\n';
  return out;
}

FiniteSignal read_finite_signal_csv(const std::string& text) {
  std::map<long long, double> pts;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto tokens = split(line, ',');
    if (tokens.size() != 2) throw ParseError("signal: expected 'index,value' lines");
    const long long n = parse_index(tokens[0], "signal");
    if (pts.count(n)) throw ParseError("signal: duplicate support index " + std::to_string(n));
    pts[n] = parse_double(tokens[1], "signal");
  }
  try {
    return FiniteSignal(std::move(pts));
  } catch (const ShapeError& e) {
    throw ParseError(std::string("signal: ") + e.what());
  }
}

std::string write_finite_signal_csv(const FiniteSignal& s) {
  std::string out;
  for (const auto& [n, v] : s.points()) {
    out += std::to_string(n);
    out += ',';
    out += format_number(v);
    out += '\n';
  }
  return out;
}

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

Cell cell_from_json(const json& j, const char* what) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string() && (j.get<std::string>() == "x" || j.get<std::string>() == "X"))
    return std::nullopt;
  if (!j.is_number()) throw ParseError(std::string(what) + ": cell is not a number or null");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + ": non-finite cell value");
  return v;
}

MaskedGrid grid_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw ParseError(std::string(what) + ": expected a nonempty array of rows");
  std::vector<std::vector<Cell>> rows;
  for (const auto& jr : j) {
    if (!jr.is_array() || jr.empty())
      throw ParseError(std::string(what) + ": expected nonempty row arrays");
    std::vector<Cell> row;
    for (const auto& jc : jr) row.push_back(cell_from_json(jc, what));
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    if (row.size() != rows[0].size()) throw ParseError(std::string(what) + ": ragged rows");
  }
  return to_grid(rows);
}

void append_cell_json(std::string& out, const Cell& c) {
  out += c ? format_number(*c) : "null";
}

std::string grid_to_json(const MaskedGrid& g) {
  std::string out = "[";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c) out += ',';
      append_cell_json(out, g.at(r, c));
    }
    out += ']';
  }
  out += ']';
  return out;
}

}  // namespace

MaskedGrid read_grid_json(const std::string& text) {
  return grid_from_json(parse_json(text, "grid"), "grid");
}

std::string write_grid_json(const MaskedGrid& g) { return grid_to_json(g) + "\n"; }

MaskedCube read_cube_json(const std::string& text) {
  const json j = parse_json(text, "cube");
  if (!j.is_object() || !j.contains("slices") || !j["slices"].is_array() ||
      j["slices"].empty())
    throw ParseError("cube: expected {\"slices\": [...]} with at least one slice");
  std::vector<MaskedGrid> slices;
  for (const auto& js : j["slices"]) slices.push_back(grid_from_json(js, "cube slice"));
  try {
    return MaskedCube(std::move(slices));
  } catch (const ShapeError& e) {
    throw ParseError(std::string("cube: ") + e.what());
  }
}

std::vector<Cell> read_signal_json(const std::string& text) {
  const json j = parse_json(text, "signal");
  if (!j.is_array() || j.empty()) throw ParseError("signal: expected a nonempty array");
  std::vector<Cell> out;
  for (const auto& jc : j) out.push_back(cell_from_json(jc, "signal"));
  return out;
}

std::string write_signal_json(const std::vector<Cell>& signal) {
  std::string out = "[";
  for (std::size_t i = 0; i < signal.size(); ++i) {
    if (i) out += ',';
    append_cell_json(out, signal[i]);
  }
  out += "]\n";
  return out;
}

FiniteSignal read_finite_signal_json(const std::string& text) {
  const json j = parse_json(text, "signal");
  if (!j.is_object() || !j.contains("support") || !j.contains("values") ||
      !j["support"].is_array() || !j["values"].is_array() ||
      j["support"].size() != j["values"].size())
    throw ParseError("signal: expected {\"support\": [...], \"values\": [...]} of equal length");
  std::map<long long, double> pts;
  for (std::size_t i = 0; i < j["support"].size(); ++i) {
    if (!j["support"][i].is_number_integer())
      throw ParseError("signal: support entries must be integers");
    const long long n = j["support"][i].get<long long>();
    if (pts.count(n)) throw ParseError("signal: duplicate support index " + std::to_string(n));
    const Cell v = cell_from_json(j["values"][i], "signal");
    if (!v) throw ParseError("signal: values must be numbers");
    pts[n] = *v;
  }
  try {
    return FiniteSignal(std::move(pts));
  } catch (const ShapeError& e) {
    throw ParseError(std::string("signal: ") + e.what());
  }
}

std::string write_finite_signal_json(const FiniteSignal& s) {
  std::string support = "[", values = "[";
  bool first = true;
  for (const auto& [n, v] : s.points()) {
    if (!first) {
      support += ',';
      values += ',';
    }
    first = false;
    support += std::to_string(n);
    values += format_number(v);
  }
  return "{\"support\":" + support + "],\"values\":" + values + "]}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace stpconv::io
