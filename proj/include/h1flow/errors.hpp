#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace h1flow {

/// Invalid observed data: malformed files, non-positive values, bad grids.
/// Carries the offending 1-based input row when one is known.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& message, std::optional<long> row = std::nullopt)
      : std::runtime_error(row ? "row " + std::to_string(*row) + ": " + message : message),
        row_(row) {}

  std::optional<long> row() const noexcept { return row_; }

 private:
  std::optional<long> row_;
};

/// Evaluation produced a nonfinite or otherwise unusable numerical result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace h1flow
