#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wreathbase/permgroup.hpp"

namespace wb::dist {

using perm::PermGroup;

/// Color of each point; the partition of [l] into color classes.
using Coloring = std::vector<std::uint32_t>;

/// Relabels colors so that first occurrences appear as 0, 1, 2, ...
Coloring canonical(std::span<const std::uint32_t> colors);

/// True iff the identity is the only element of `g` preserving every color
/// class. Throws std::invalid_argument on a degree mismatch.
bool coloring_is_distinguishing(const PermGroup& g, std::span<const std::uint32_t> colors);

struct SearchOptions {
  std::uint64_t seed = 0;
  unsigned random_trials = 1000;          // random colorings tried per k before the systematic pass
  std::uint64_t budget = 100'000'000;     // colorings examined by the systematic pass
};

/// Outcome of a distinguishing-number search: the value lies in
/// [lower, upper], and is exact when the two agree.
struct DistResult {
  unsigned lower = 0;
  unsigned upper = 0;
  Coloring witness;                       // distinguishing coloring with `upper` colors
  std::uint64_t colorings_checked = 0;

  bool exact() const { return lower == upper; }
  std::string to_string() const;
};

/// Searches k = 1, 2, ... for the smallest k admitting a distinguishing
/// coloring. Within each k a seeded random pre-pass runs first, then every
/// coloring with exactly k classes is visited in canonical form. On budget
/// exhaustion the result is an interval, never a guess.
DistResult distinguishing_number(const PermGroup& g, const SearchOptions& opts = {});

struct ChanResult {
  unsigned exact = 0; // min{ d : C(d, m) >= r }
  unsigned bound = 0; // ceil(m * r^(1/m)), decided by integer comparison
};

/// Distinguishing number of S_m wr S_r in its imprimitive action, and the
/// simple upper bound ceil(m r^(1/m)).
ChanResult chan_wreath_distnum(unsigned m, unsigned r);

struct CatalogEntry {
  std::string name;
  PermGroup group;
};

struct CatalogRow {
  std::string name;
  std::size_t degree = 0;
  std::size_t order = 0;
  DistResult value;
  bool accepted = false; // primitive and not containing the alternating group
  std::string rejection;
};

struct CatalogReport {
  std::vector<CatalogRow> rows;
  unsigned max_d = 0;
  bool all_ok = false; // every entry accepted, exact, and d <= 4
};

/// Exact distinguishing numbers for primitive groups not containing the
/// alternating group; such groups have d <= 4.
CatalogReport primitive_catalog_check(const std::vector<CatalogEntry>& catalog,
                                      const SearchOptions& opts = {});

/// C5, D5, AGL(1,5), PSL(2,5) on 6 points, C7, D7.
std::vector<CatalogEntry> builtin_primitive_catalog();

} // namespace wb::dist
