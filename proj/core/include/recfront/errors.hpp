#pragma once

#include <stdexcept>
#include <string>

namespace recfront {

// Exact coordinate equality where the algorithms assume none.
// Continuous sampling makes ties a probability-zero event; degenerate input
// raises this instead of silently producing an arbitrary answer.
class TieError : public std::runtime_error {
 public:
  explicit TieError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive integration failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace recfront
