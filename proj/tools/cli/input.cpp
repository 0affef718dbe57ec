#include "cli/input.hpp"

#include <fstream>
#include <limits>

namespace bhk::cli {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

Integer integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
    return Integer(j.get<long long>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
      return Integer(s);
  }
  throw InputError(std::string(what) + " must be an integer");
}

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw InputError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

IntVector integer_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  IntVector out;
  for (const auto& x : j) out.push_back(integer_from_json(x, what));
  return out;
}

}  // namespace

InputDocument parse_input(const json& j) {
  InputDocument doc;
  const Integer n = integer_from_json(field(j, "n"), "n");
  if (n < 0 || n > 64) throw InputError("n must lie in [0, 64]");
  doc.n = n.convert_to<std::size_t>();
  const std::size_t size = doc.n + 1;

  const json& rows = field(j, "matrix");
  if (!rows.is_array() || rows.size() != size)
    throw InputError("matrix must have n+1 = " + std::to_string(size) + " rows");
  doc.matrix = IntMatrix(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const IntVector r = integer_list(rows[i], "matrix row");
    if (r.size() != size)
      throw InputError("matrix row " + std::to_string(i + 1) + " must have " +
                       std::to_string(size) + " entries");
    for (std::size_t k = 0; k < size; ++k) {
      if (r[k] < 0) throw InputError("matrix entries must be non-negative");
      doc.matrix(i, k) = r[k];
    }
  }

  const json& gens = field(field(j, "group"), "generators");
  if (!gens.is_array()) throw InputError("group.generators must be an array");
  for (const auto& g : gens) {
    const IntVector num = integer_list(field(g, "num"), "generator num");
    const Integer den = integer_from_json(field(g, "den"), "generator den");
    if (num.size() != size)
      throw InputError("generator vectors must have n+1 = " + std::to_string(size) + " entries");
    if (den < 1) throw InputError("generator denominators must be positive");
    doc.generators.emplace_back(num, den);
  }

  if (auto it = j.find("scale"); it != j.end() && !it->is_null()) {
    Integer s = integer_from_json(*it, "scale");
    if (s < 1) throw InputError("scale must be positive");
    doc.scale = std::move(s);
  }
  return doc;
}

InputDocument load_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return parse_input(j);
}

ordered_json to_json(const InputDocument& doc) {
  ordered_json out;
  out["n"] = doc.n;
  ordered_json rows = ordered_json::array();
  for (const auto& r : doc.matrix.row_list()) {
    ordered_json row = ordered_json::array();
    for (const auto& x : r) row.push_back(integer_json(x));
    rows.push_back(std::move(row));
  }
  out["matrix"] = std::move(rows);
  ordered_json gens = ordered_json::array();
  for (const auto& g : doc.generators) {
    ordered_json num = ordered_json::array();
    for (const auto& x : g.numerators()) num.push_back(integer_json(x));
    gens.push_back({{"num", std::move(num)}, {"den", integer_json(g.denominator())}});
  }
  out["group"] = {{"generators", std::move(gens)}};
  if (doc.scale) out["scale"] = integer_json(*doc.scale);
  return out;
}

}  // namespace bhk::cli
