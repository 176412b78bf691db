#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace wb::report {

using Json = nlohmann::ordered_json;

/// Result of one command. Serializes deterministically: fields appear in a
/// fixed order, big integers are decimal strings, and timing is omitted
/// (null) unless it was explicitly recorded.
struct Report {
  std::string command;
  Json params = Json::object();
  Json results = Json::object();
  std::vector<std::string> discrepancies;
  std::optional<double> timing_ms;
  std::uint64_t seed = 0;

  Json to_json() const;
  static Report from_json(const Json& j);

  std::string json_text() const;
  /// Human-readable "path: value" listing.
  std::string table_text() const;
  /// Two-column "key,value" CSV of the flattened results.
  std::string csv_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Flattens nested objects/arrays into (dotted.path, scalar text) pairs.
std::vector<std::pair<std::string, std::string>> flatten(const Json& j);

} // namespace wb::report
