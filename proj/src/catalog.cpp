#include "permchar/catalog.hpp"

#include <algorithm>

#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"

namespace permchar {
namespace {

std::string cycle_of(std::size_t first, std::size_t last) {
  std::string out = "(";
  for (std::size_t i = first; i <= last; ++i) {
    if (i != first) out += ' ';
    out += std::to_string(i);
  }
  return out + ")";
}

std::string dihedral_reflection(std::size_t n) {
  std::string out;
  for (std::size_t i = 2, j = n; i < j; ++i, --j) out += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  return out.empty() ? "()" : out;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"C1", "cyclic", 1, {}, {}, 1});
  for (std::size_t n = 2; n <= 16; ++n) {
    out.push_back({"C" + std::to_string(n), "cyclic", n, {cycle_of(1, n)}, {}, n});
  }
  out.push_back({"D1", "dihedral", 2, {"(1 2)"}, {}, 2});
  out.push_back({"D2", "dihedral", 4, {"(1 2)(3 4)", "(1 3)(2 4)"}, {}, 4});
  for (std::size_t n = 3; n <= 12; ++n) {
    out.push_back({"D" + std::to_string(n), "dihedral", n, {cycle_of(1, n), dihedral_reflection(n)}, {}, 2 * n});
  }
  out.push_back({"Q8", "quaternion", 8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"}, {}, 8});
  for (std::size_t k = 1; k <= 4; ++k) {
    CatalogEntry e{"C2^" + std::to_string(k), "elementary-abelian", 2 * k, {}, {}, std::size_t{1} << k};
    for (std::size_t i = 0; i < k; ++i) e.generators.push_back(cycle_of(2 * i + 1, 2 * i + 2));
    out.push_back(std::move(e));
  }
  out.push_back({"S1", "symmetric", 1, {}, {}, 1});
  out.push_back({"S2", "symmetric", 2, {"(1 2)"}, {}, 2});
  for (std::size_t n = 3; n <= 6; ++n) {
    out.push_back({"S" + std::to_string(n), "symmetric", n, {"(1 2)", cycle_of(1, n)}, {}, factorial(n)});
  }
  out.push_back({"A1", "alternating", 1, {}, {}, 1});
  out.push_back({"A2", "alternating", 2, {}, {}, 1});
  out.push_back({"A3", "alternating", 3, {"(1 2 3)"}, {}, 3});
  for (std::size_t n = 4; n <= 6; ++n) {
    const std::string long_cycle = n % 2 == 1 ? cycle_of(1, n) : cycle_of(2, n);
    out.push_back({"A" + std::to_string(n), "alternating", n, {"(1 2 3)", long_cycle}, {}, factorial(n) / 2});
  }
  // Automorphisms of the Fano plane; the order is recomputed on every build.
  out.push_back({"GL(3,2)", "2-transitive", 7, {"(1 2 3 4 5 6 7)", "(1 2)(3 6)"}, {}, 168});

  const std::vector<std::vector<std::string>> products = {
      {"C2", "C4"}, {"C3", "C3"}, {"C2", "C6"}, {"C2", "S3"}, {"C2", "C8"},
      {"C4", "C4"}, {"C2", "D4"}, {"C2", "Q8"}, {"C3", "S3"}, {"C2", "A4"},
  };
  for (const auto& factors : products) {
    std::string name;
    std::size_t order = 1;
    std::size_t degree = 0;
    for (const auto& f : factors) {
      const auto it = std::find_if(out.begin(), out.end(), [&](const CatalogEntry& e) { return e.name == f; });
      name += (name.empty() ? "" : "x") + f;
      order *= it->expected_order;
      degree += it->degree;
    }
    out.push_back({name, "product", degree, {}, factors, order});
  }
  return out;
}

const CatalogEntry* find_entry(std::string_view name) {
  const auto entries = catalog_entries();
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  if (name == "PSL(2,7)" || name == "L3(2)") return find_entry("GL(3,2)");
  return nullptr;
}

}  // namespace

std::span<const CatalogEntry> catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

PermGroup build_catalog_entry(const CatalogEntry& entry, std::size_t order_cap) {
  PermGroup group = [&] {
    if (!entry.factors.empty()) {
      PermGroup acc = catalog_lookup(entry.factors.front(), order_cap);
      for (std::size_t i = 1; i < entry.factors.size(); ++i) {
        acc = direct_product(acc, catalog_lookup(entry.factors[i], order_cap), order_cap);
      }
      return acc.renamed(entry.name);
    }
    std::vector<Permutation> gens;
    for (const auto& text : entry.generators) gens.push_back(perm_from_cycles(text, entry.degree));
    return group_from_generators(entry.degree, std::move(gens), order_cap, entry.name);
  }();
  if (group.order() != entry.expected_order) {
    throw Error(ErrorCode::CatalogOrderMismatch, entry.name + " should have order " +
                                                     std::to_string(entry.expected_order) + " but its generators give " +
                                                     std::to_string(group.order()));
  }
  return group;
}

PermGroup catalog_lookup(std::string_view name, std::size_t order_cap) {
  if (const CatalogEntry* entry = find_entry(name)) return build_catalog_entry(*entry, order_cap);

  std::vector<std::string_view> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x') {
      factors.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  if (factors.size() < 2) throw Error(ErrorCode::UnknownName, "no catalog group named '" + std::string(name) + "'");
  for (auto f : factors) {
    if (!find_entry(f)) {
      throw Error(ErrorCode::UnknownName,
                  "no catalog group named '" + std::string(f) + "' in product '" + std::string(name) + "'");
    }
  }
  PermGroup acc = catalog_lookup(factors.front(), order_cap);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = direct_product(acc, catalog_lookup(factors[i], order_cap), order_cap);
  }
  return acc.renamed(std::string(name));
}

std::vector<const CatalogEntry*> catalog_selection(std::size_t max_order) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog_entries()) {
    if (e.expected_order <= max_order) out.push_back(&e);
  }
  return out;
}

std::vector<PermGroup> catalog_universe(std::size_t max_order, std::size_t order_cap) {
  std::vector<PermGroup> out;
  for (const CatalogEntry* e : catalog_selection(max_order)) out.push_back(build_catalog_entry(*e, order_cap));
  return out;
}

}  // namespace permchar
