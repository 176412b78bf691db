#include "wreathbase/report.hpp"

#include <sstream>

namespace wb::report {

Json Report::to_json() const
{
  Json j = Json::object();
  j["command"] = command;
  j["params"] = params;
  j["results"] = results;
  j["discrepancies"] = discrepancies;
  j["timing_ms"] = timing_ms ? Json(*timing_ms) : Json(nullptr);
  j["seed"] = seed;
  return j;
}

Report Report::from_json(const Json& j)
{
  Report r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.results = j.at("results");
  r.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
  if (!j.at("timing_ms").is_null())
    r.timing_ms = j.at("timing_ms").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

std::string Report::json_text() const { return to_json().dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v)
{
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

void flatten_into(const Json& j, const std::string& prefix,
                  std::vector<std::pair<std::string, std::string>>& out)
{
  if (j.is_object()) {
    if (j.empty())
      out.emplace_back(prefix, "{}");
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_into(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty())
      out.emplace_back(prefix, "[]");
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten_into(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, scalar_text(j));
  }
}

std::string csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::vector<std::pair<std::string, std::string>> flatten(const Json& j)
{
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(j, "", out);
  return out;
}

std::string Report::table_text() const
{
  std::ostringstream out;
  out << "command: " << command << "\n";
  for (const auto& [k, v] : flatten(params))
    out << "  " << k << " = " << v << "\n";
  for (const auto& [k, v] : flatten(results))
    out << k << ": " << v << "\n";
  if (!discrepancies.empty()) {
    out << "discrepancies:\n";
    for (const auto& d : discrepancies)
      out << "  ! " << d << "\n";
  }
  if (timing_ms)
    out << "timing_ms: " << *timing_ms << "\n";
  return out.str();
}

std::string Report::csv_text() const
{
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [k, v] : flatten(results))
    out << csv_field(k) << "," << csv_field(v) << "\n";
  for (std::size_t i = 0; i < discrepancies.size(); ++i)
    out << "discrepancies[" << i << "]," << csv_field(discrepancies[i]) << "\n";
  return out.str();
}

} // namespace wb::report
