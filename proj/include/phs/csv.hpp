#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace phs::csv {

// Comma-separated, header row required, UTF-8, NA token for missing values
// (responses only). Throws ParseError with row/column on malformed input.

Eigen::MatrixXd read_matrix(const std::string& path);

struct ResponseColumn {
  Eigen::VectorXd values;     // 0.0 placeholder where missing
  std::vector<bool> missing;  // empty when no NA present
};
ResponseColumn read_response(const std::string& path);

// full-precision output, written atomically (temp file + rename)
void write_matrix(const std::string& path, const Eigen::MatrixXd& m,
                  const std::vector<std::string>& header);
void write_lines(const std::string& path,
                 const std::vector<std::string>& lines);

std::string format_double(double x);  // round-trip precision

}  // namespace phs::csv
