#include <algorithm>
#include <map>

#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"
#include "permchar/perm_group.hpp"

namespace permchar {
namespace {

void require_sweep_cap(const PermGroup& group, std::size_t sweep_cap) {
  if (group.order() > sweep_cap) {
    throw Error(ErrorCode::SweepCapExceeded, describe_group(group) + " exceeds the sweep cap " +
                                                 std::to_string(sweep_cap));
  }
}

std::vector<ElementIndex> generator_indices(const PermGroup& group, std::span<const Permutation> gens) {
  std::vector<ElementIndex> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(group.index_of(g));
  return out;
}

}  // namespace

// Every subgroup is the join of its cyclic subgroups, so joining each known
// subgroup with each cyclic subgroup until nothing new appears finds them all.
std::vector<SubgroupHandle> subgroups(const PermGroup& group, std::size_t sweep_cap) {
  require_sweep_cap(group, sweep_cap);

  struct Found {
    std::vector<ElementIndex> generators;
    std::vector<ElementIndex> members;
    std::vector<bool> mask;
  };
  std::map<std::vector<ElementIndex>, std::size_t> seen;
  std::vector<Found> found;
  auto add = [&](std::vector<ElementIndex> gens, std::vector<ElementIndex> members) {
    if (seen.contains(members)) return false;
    std::vector<bool> mask(group.order(), false);
    for (ElementIndex x : members) mask[x] = true;
    seen.emplace(members, found.size());
    found.push_back({std::move(gens), std::move(members), std::move(mask)});
    return true;
  };

  add({}, {0});
  std::vector<std::size_t> cyclic;  // indices into found, non-trivial cyclic subgroups
  for (ElementIndex x = 1; x < group.order(); ++x) {
    const ElementIndex gen[] = {x};
    auto members = close_under_products(group, gen);
    if (add({x}, std::move(members))) cyclic.push_back(found.size() - 1);
  }

  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t c : cyclic) {
      const ElementIndex generator = found[c].generators.front();
      if (found[k].mask[generator]) continue;
      std::vector<ElementIndex> gens = found[k].generators;
      gens.push_back(generator);
      auto members = close_under_products(group, gens);
      add(std::move(gens), std::move(members));
    }
  }

  std::vector<SubgroupHandle> out;
  out.reserve(found.size());
  for (auto& f : found) {
    std::vector<Permutation> gens;
    for (ElementIndex g : f.generators) gens.push_back(group.element(g));
    out.push_back(make_subgroup(group, std::move(gens), std::move(f.members)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const PermGroup& group, const SubgroupHandle& u) {
  require_subgroup(group, u);
  const auto u_gens = generator_indices(group, u.generators());
  for (const auto& g : group.generators()) {
    const ElementIndex h = group.index_of(g);
    for (ElementIndex x : u_gens) {
      if (!u.contains(group.conjugate(x, h))) return false;
    }
  }
  return true;
}

std::vector<SubgroupHandle> normal_subgroups(const PermGroup& group, std::size_t sweep_cap) {
  auto all = subgroups(group, sweep_cap);
  std::vector<SubgroupHandle> out;
  for (auto& s : all) {
    if (is_normal(group, s)) out.push_back(std::move(s));
  }
  return out;
}

SubgroupHandle normal_closure(const PermGroup& group, std::span<const Permutation> seeds) {
  std::vector<ElementIndex> gens = generator_indices(group, seeds);
  const auto group_gens = generator_indices(group, group.generators());
  auto members = close_under_products(group, gens);
  std::vector<bool> mask(group.order(), false);
  for (ElementIndex x : members) mask[x] = true;

  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (ElementIndex h : group_gens) {
      const ElementIndex y = group.conjugate(gens[k], h);
      if (mask[y]) continue;
      gens.push_back(y);
      members = close_under_products(group, gens);
      mask.assign(group.order(), false);
      for (ElementIndex x : members) mask[x] = true;
    }
  }

  std::vector<Permutation> perms;
  for (ElementIndex g : gens) perms.push_back(group.element(g));
  return make_subgroup(group, std::move(perms), std::move(members));
}

SubgroupHandle subgroup_product(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n) {
  require_subgroup(group, u);
  require_subgroup(group, n);
  if (!is_normal(group, n)) {
    throw Error(ErrorCode::NotNormal, "<" + n.label() + "> is not normal in " + describe_group(group));
  }
  std::vector<bool> mask(group.order(), false);
  std::vector<ElementIndex> members;
  for (ElementIndex a : u.members()) {
    for (ElementIndex b : n.members()) {
      const ElementIndex y = group.multiply(a, b);
      if (mask[y]) continue;
      mask[y] = true;
      members.push_back(y);
    }
  }
  std::sort(members.begin(), members.end());
  std::vector<Permutation> gens(u.generators().begin(), u.generators().end());
  for (const auto& g : n.generators()) {
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  return make_subgroup(group, std::move(gens), std::move(members));
}

SubgroupHandle generated_with(const PermGroup& group, const SubgroupHandle& n, const Permutation& g) {
  require_subgroup(group, n);
  group.index_of(g);
  std::vector<Permutation> gens(n.generators().begin(), n.generators().end());
  gens.push_back(g);
  return SubgroupHandle::generated(group, std::move(gens));
}

std::optional<Permutation> are_conjugate_subgroups(const PermGroup& group, const SubgroupHandle& u,
                                                   const SubgroupHandle& v) {
  require_subgroup(group, u);
  require_subgroup(group, v);
  if (u.order() != v.order()) return std::nullopt;
  const auto u_gens = generator_indices(group, u.generators());
  for (ElementIndex h = 0; h < group.order(); ++h) {
    const bool maps_into =
        std::all_of(u_gens.begin(), u_gens.end(), [&](ElementIndex x) { return v.contains(group.conjugate(x, h)); });
    if (maps_into) return group.element(h);
  }
  return std::nullopt;
}

}  // namespace permchar
