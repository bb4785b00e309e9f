#include "phs/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "phs/errors.hpp"

namespace phs::csv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    // trim surrounding whitespace and a trailing CR
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back("");
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("non-numeric cell '" + cell + "' at row " +
                     std::to_string(row) + ", column " + std::to_string(col));
  }
  return value;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(split_line(line));
  }
  if (rows.size() < 2) {
    throw ParseError("'" + path + "': need a header row and at least one row");
  }
  const std::size_t width = rows[0].size();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw ParseError("'" + path + "': ragged row " + std::to_string(r) +
                       " (" + std::to_string(rows[r].size()) + " cells, expected " +
                       std::to_string(width) + ")");
    }
  }
  return rows;
}

}  // namespace

Eigen::MatrixXd read_matrix(const std::string& path) {
  const auto rows = read_rows(path);
  const auto n = rows.size() - 1;
  const auto p = rows[0].size();
  Eigen::MatrixXd m(n, p);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < p; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_cell(rows[r + 1][c], r + 1, c);
  return m;
}

ResponseColumn read_response(const std::string& path) {
  const auto rows = read_rows(path);
  if (rows[0].size() != 1) {
    throw ParseError("'" + path + "': response file must have one column");
  }
  const auto n = rows.size() - 1;
  ResponseColumn col;
  col.values.resize(static_cast<Eigen::Index>(n));
  std::vector<bool> missing(n, false);
  bool any_missing = false;
  for (std::size_t r = 0; r < n; ++r) {
    const std::string& cell = rows[r + 1][0];
    if (cell == "NA") {
      col.values(static_cast<Eigen::Index>(r)) = 0.0;
      missing[r] = true;
      any_missing = true;
    } else {
      col.values(static_cast<Eigen::Index>(r)) = parse_cell(cell, r + 1, 0);
    }
  }
  if (any_missing) col.missing = std::move(missing);
  return col;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_lines(const std::string& path,
                 const std::vector<std::string>& lines) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ParseError("cannot write '" + tmp + "'");
    for (const auto& line : lines) out << line << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw ParseError("rename failed for '" + path + "': " +
                     std::strerror(errno));
  }
}

void write_matrix(const std::string& path, const Eigen::MatrixXd& m,
                  const std::vector<std::string>& header) {
  std::vector<std::string> lines;
  lines.reserve(static_cast<std::size_t>(m.rows()) + 1);
  {
    std::string h;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c) h += ',';
      h += header[c];
    }
    lines.push_back(std::move(h));
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    std::string line;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) line += ',';
      line += format_double(m(r, c));
    }
    lines.push_back(std::move(line));
  }
  write_lines(path, lines);
}

}  // namespace phs::csv
