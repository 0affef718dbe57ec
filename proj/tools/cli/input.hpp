#pragma once

#include <bhk/exact.hpp>
#include <bhk/symmetry.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bhk::cli {

/// Malformed or unreadable input (exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One orbifold description:
///   {"n": 4, "matrix": [[...]], "group": {"generators": [{"num": [...], "den": 24}]},
///    "scale": 1}
struct InputDocument {
  std::size_t n = 0;
  IntMatrix matrix;
  std::vector<PhaseVector> generators;
  std::optional<Integer> scale;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

InputDocument parse_input(const nlohmann::json& j);
InputDocument load_input(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const InputDocument& doc);

// Integers go out as JSON numbers when they fit in 64 bits, as decimal
// strings otherwise; both forms are accepted back.
nlohmann::ordered_json integer_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j, const char* what);

}  // namespace bhk::cli
