#pragma once

#include <stdexcept>
#include <string>

namespace phs {

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Cholesky failure after ridge escalation; carries the offending block index
// when known (-1 otherwise).
struct SingularityError : std::runtime_error {
  explicit SingularityError(const std::string& msg, int block = -1)
      : std::runtime_error(msg), block_index(block) {}
  int block_index;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace phs
