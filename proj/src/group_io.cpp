#include "wreathbase/group_io.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace wb::perm {

namespace {

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg)
{
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

Perm parse_cycles(const std::string& text, std::size_t degree, std::size_t line)
{
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] != '(')
      fail(line, "expected '(' in cycle notation");
    const auto close = text.find(')', i);
    if (close == std::string::npos)
      fail(line, "unterminated cycle");
    std::istringstream body(text.substr(i + 1, close - i - 1));
    std::vector<std::uint32_t> cycle;
    std::string tok;
    while (body >> tok) {
      for (auto& ch : tok)
        if (ch == ',')
          ch = ' ';
      std::istringstream parts(tok);
      long long v;
      while (parts >> v) {
        if (v < 1 || static_cast<std::size_t>(v) > degree)
          fail(line, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
        cycle.push_back(static_cast<std::uint32_t>(v - 1));
      }
      if (!parts.eof())
        fail(line, "bad token '" + tok + "'");
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    fail(line, e.what());
  }
}

} // namespace

PermGroup parse_generators(std::istream& in, std::uint64_t cap)
{
  std::string raw;
  std::size_t line = 0;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Perm> gens;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const auto text = trim(raw);
    if (text.empty())
      continue;
    if (!have_degree) {
      std::istringstream ss(text);
      std::string kw;
      long long n = -1;
      ss >> kw >> n;
      if (kw != "degree" || n < 1 || !ss.eof())
        fail(line, "first line must be 'degree N'");
      degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    gens.push_back(parse_cycles(text, degree, line));
  }
  if (!have_degree)
    throw std::invalid_argument("missing 'degree N' line");
  return PermGroup::from_generators(degree, std::move(gens), cap);
}

PermGroup parse_generators_text(const std::string& text, std::uint64_t cap)
{
  std::istringstream in(text);
  return parse_generators(in, cap);
}

std::string format_generators(const PermGroup& g)
{
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& p : g.generators())
    out += p.to_cycle_string() + "\n";
  return out;
}

PermGroup builtin_group(const std::string& name, std::uint64_t cap)
{
  static const std::regex simple(R"(([SACD])(\d+))");
  static const std::regex wreath(R"(S(\d+)wrS(\d+))");
  static const std::regex agl(R"(AGL1_(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, wreath))
    return wreath_imprimitive(std::stoul(m[1]), std::stoul(m[2]), cap);
  if (std::regex_match(name, m, agl))
    return affine_line(std::stoul(m[1]), cap);
  if (name == "PSL2_5")
    return psl2_5();
  if (std::regex_match(name, m, simple)) {
    const std::size_t n = std::stoul(m[2]);
    if (n < 1)
      throw std::invalid_argument("builtin group degree must be positive");
    switch (m.str(1)[0]) {
    case 'S': return symmetric(n, cap);
    case 'A': return alternating(n, cap);
    case 'C': return cyclic(n, cap);
    case 'D': return dihedral(n, cap);
    }
  }
  throw std::invalid_argument("unknown builtin group '" + name + "'");
}

} // namespace wb::perm
