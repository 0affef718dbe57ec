#pragma once

#include <stdexcept>
#include <string>

namespace bhk {

enum class ErrorKind {
  dimension,
  singular_matrix,
  condition_violation,
  invalid_symmetry,
  sl_violation,
  sector_diagnostic,
  resource_limit,
  domain,
};

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bhk
