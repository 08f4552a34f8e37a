#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permchar/perm_group.hpp"

namespace permchar {

/// Contents of a group file:
///
///     # comment
///     name C4
///     degree 4
///     gen (1 2 3 4)
///
/// `degree` must precede the `gen` lines; `name` is optional. Blank lines and
/// lines starting with '#' are ignored.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

/// Errors carry the 1-based line number they refer to.
GroupSpec parse_group_spec(std::string_view text);
PermGroup parse_group_file(std::string_view text, std::size_t order_cap = kDefaultOrderCap);

std::string render_group_file(const GroupSpec& spec);
std::string render_group_file(const PermGroup& group);
/// Comments dropped, keywords in canonical order, cycles in canonical form.
std::string canonical_group_file(std::string_view text);

/// Semicolon-separated cycle words generating a subgroup of `group`; the empty
/// string is the trivial subgroup. Throws ParseError or NotInGroup.
SubgroupHandle parse_subgroup_arg(std::string_view text, const PermGroup& group);

}  // namespace permchar
