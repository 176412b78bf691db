#pragma once

#include <istream>
#include <string>

#include "wreathbase/permgroup.hpp"

namespace wb::perm {

/// Parses the generator text format:
///
///     # comment
///     degree 6
///     (1 2 3)(4 5)
///     (1 6)
///
/// Cycle notation is 1-indexed; blank lines and `#` comments are ignored.
/// Throws std::invalid_argument with a line number on malformed input.
PermGroup parse_generators(std::istream& in, std::uint64_t cap = kDefaultGroupCap);
PermGroup parse_generators_text(const std::string& text, std::uint64_t cap = kDefaultGroupCap);

/// Writes `g` in the same format; parse_generators reads it back.
std::string format_generators(const PermGroup& g);

/// Builtin names: Sn, An, Cn, Dn, SmwrSr (e.g. "S3wrS2"), AGL1_p, PSL2_5.
PermGroup builtin_group(const std::string& name, std::uint64_t cap = kDefaultGroupCap);

} // namespace wb::perm
