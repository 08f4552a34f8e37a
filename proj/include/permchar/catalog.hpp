#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permchar/perm_group.hpp"

namespace permchar {

/// A named group: either explicit generators in cycle notation, or a direct
/// product of other entries (`factors` non-empty).
struct CatalogEntry {
  std::string name;
  std::string family;
  std::size_t degree = 1;
  std::vector<std::string> generators;
  std::vector<std::string> factors;
  std::size_t expected_order = 1;
};

std::span<const CatalogEntry> catalog_entries();

/// Builds the entry and recomputes its order; a mismatch with the recorded
/// order throws Error(CatalogOrderMismatch).
PermGroup build_catalog_entry(const CatalogEntry& entry, std::size_t order_cap = kDefaultOrderCap);

/// A catalog name, or factors joined by 'x' ("C2xC2xC3"). Throws Error(UnknownName).
PermGroup catalog_lookup(std::string_view name, std::size_t order_cap = kDefaultOrderCap);

/// Catalog entries with expected order <= max_order, in catalog order.
std::vector<const CatalogEntry*> catalog_selection(std::size_t max_order = std::numeric_limits<std::size_t>::max());
std::vector<PermGroup> catalog_universe(std::size_t max_order, std::size_t order_cap = kDefaultOrderCap);

}  // namespace permchar
