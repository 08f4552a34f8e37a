#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "permchar/permutation.hpp"

namespace permchar {

/// Parses 1-based cycle notation such as "(1 2 3 4)" or "(1 3)(2 4)".
///
/// Points are separated by whitespace (commas are accepted too). "()" is the
/// identity, points not mentioned are fixed, and juxtaposed cycles multiply
/// left to right, so "(1 2)(1 3)" is a 3-cycle. A point may not repeat inside
/// one cycle. `line` is only used to annotate errors.
Permutation perm_from_cycles(std::string_view text, std::size_t degree, std::size_t line = 0);

/// Canonical disjoint-cycle form: each cycle starts at its least point,
/// cycles ordered by that point, fixed points omitted, "()" for the identity.
std::string to_cycle_string(const Permutation& p);

}  // namespace permchar
