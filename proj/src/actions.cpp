#include "permchar/actions.hpp"

#include <algorithm>

#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"

namespace permchar {

std::vector<Permutation> CosetSpace::reps() const {
  std::vector<Permutation> out;
  out.reserve(reps_.size());
  for (ElementIndex x : reps_) out.push_back(parent().element(x));
  return out;
}

CosetSpace right_cosets(const PermGroup& group, const SubgroupHandle& u) {
  require_subgroup(group, u);
  CosetSpace space(u);
  constexpr Point kUnassigned = static_cast<Point>(-1);
  space.coset_of_.assign(group.order(), kUnassigned);
  // Walking elements in order, the first unassigned one is the least member of its coset.
  for (ElementIndex x = 0; x < group.order(); ++x) {
    if (space.coset_of_[x] != kUnassigned) continue;
    const auto c = static_cast<Point>(space.reps_.size());
    space.reps_.push_back(x);
    for (ElementIndex a : u.members()) space.coset_of_[group.multiply(a, x)] = c;
  }
  return space;
}

ActionHom coset_action(const PermGroup& group, const SubgroupHandle& u) { return ActionHom(right_cosets(group, u)); }

Point ActionHom::act(Point coset, ElementIndex g) const {
  return space_.coset_of(parent().multiply(space_.rep_indices()[coset], g));
}

Permutation ActionHom::image(ElementIndex g) const {
  std::vector<Point> images(degree());
  for (Point i = 0; i < images.size(); ++i) images[i] = act(i, g);
  return Permutation::from_images(std::move(images));
}

Permutation ActionHom::image(const Permutation& g) const { return image(parent().index_of(g)); }

std::int64_t fixed_points(const ActionHom& action, ElementIndex g) {
  std::int64_t count = 0;
  for (Point i = 0; i < action.degree(); ++i) {
    if (action.act(i, g) == i) ++count;
  }
  return count;
}

std::int64_t fixed_points(const ActionHom& action, const Permutation& g) {
  return fixed_points(action, action.parent().index_of(g));
}

PermutationCharacter::PermutationCharacter(PermGroup group, std::vector<std::int64_t> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  if (values_.size() != group_.classes().size()) {
    throw Error(ErrorCode::GroupMismatch, "character has " + std::to_string(values_.size()) + " values for " +
                                              std::to_string(group_.classes().size()) + " classes");
  }
}

std::pair<std::int64_t, std::int64_t> PermutationCharacter::inner_with_trivial() const {
  std::int64_t sum = 0;
  const auto classes = group_.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    sum += values_[c] * static_cast<std::int64_t>(classes[c].members.size());
  }
  return {sum, static_cast<std::int64_t>(group_.order())};
}

PermutationCharacter perm_character(const ActionHom& action) {
  const PermGroup& group = action.parent();
  std::vector<std::int64_t> values;
  values.reserve(group.classes().size());
  for (const auto& cls : group.classes()) values.push_back(fixed_points(action, cls.representative));
  return PermutationCharacter(group, std::move(values));
}

PermutationCharacter perm_character(const PermGroup& group, const SubgroupHandle& u) {
  return perm_character(coset_action(group, u));
}

std::int64_t frobenius_character_value(const PermGroup& group, const SubgroupHandle& u, ElementIndex g) {
  require_subgroup(group, u);
  std::int64_t hits = 0;
  for (ElementIndex x = 0; x < group.order(); ++x) {
    if (u.contains(group.conjugate(g, x))) ++hits;
  }
  return hits / static_cast<std::int64_t>(u.order());
}

bool characters_equal(const PermutationCharacter& a, const PermutationCharacter& b) {
  if (!a.group().same_as(b.group())) {
    throw Error(ErrorCode::GroupMismatch, "characters of " + describe_group(a.group()) + " and " +
                                              describe_group(b.group()) + " cannot be compared");
  }
  return std::ranges::equal(a.values(), b.values());
}

bool characters_equal_pointwise(const PermutationCharacter& a, const PermutationCharacter& b) {
  if (!a.group().same_as(b.group())) {
    throw Error(ErrorCode::GroupMismatch, "characters of " + describe_group(a.group()) + " and " +
                                              describe_group(b.group()) + " cannot be compared");
  }
  for (ElementIndex x = 0; x < a.group().order(); ++x) {
    if (a.value_at(x) != b.value_at(x)) return false;
  }
  return true;
}

std::int64_t character_value(const PermutationCharacter& chi, const Permutation& g) {
  return chi.value_at(chi.group().index_of(g));
}

OrbitPartition orbits_of_subgroup(const ActionHom& action, const SubgroupHandle& n) {
  require_subgroup(action.parent(), n);
  std::vector<ElementIndex> gens;
  for (const auto& g : n.generators()) gens.push_back(action.parent().index_of(g));

  OrbitPartition orbits;
  std::vector<bool> seen(action.degree(), false);
  for (Point start = 0; start < action.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (ElementIndex g : gens) {
        const Point next = action.act(orbit[k], g);
        if (seen[next]) continue;
        seen[next] = true;
        orbit.push_back(next);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

bool is_normal_in(const SubgroupHandle& n, const SubgroupHandle& h) {
  if (!n.parent().same_as(h.parent())) return false;
  const PermGroup& group = h.parent();
  for (ElementIndex x : n.members()) {
    if (!h.contains(x)) return false;
  }
  for (const auto& hg : h.generators()) {
    const ElementIndex hi = group.index_of(hg);
    for (const auto& ng : n.generators()) {
      if (!n.contains(group.conjugate(group.index_of(ng), hi))) return false;
    }
  }
  return true;
}

std::int64_t nonsplit_orbit_count(const ActionHom& action, const SubgroupHandle& h, const SubgroupHandle& n) {
  require_subgroup(action.parent(), h);
  require_subgroup(action.parent(), n);
  if (!is_normal_in(n, h)) {
    throw Error(ErrorCode::NotNormalInH, "<" + n.label() + "> is not a normal subgroup of <" + h.label() + ">");
  }
  const OrbitPartition h_orbits = orbits_of_subgroup(action, h);
  const OrbitPartition n_orbits = orbits_of_subgroup(action, n);
  // Both partitions are sorted by least point, so an H-orbit equal to an
  // N-orbit is the N-orbit through its least point.
  std::vector<std::size_t> n_orbit_of(action.degree());
  for (std::size_t k = 0; k < n_orbits.size(); ++k) {
    for (Point p : n_orbits[k]) n_orbit_of[p] = k;
  }
  std::int64_t r = 0;
  for (const auto& orbit : h_orbits) {
    if (n_orbits[n_orbit_of[orbit.front()]] == orbit) ++r;
  }
  return r;
}

std::int64_t fixed_orbit_count(const ActionHom& action, const OrbitPartition& orbits, ElementIndex g) {
  std::vector<std::size_t> orbit_of(action.degree());
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    for (Point p : orbits[k]) orbit_of[p] = k;
  }
  std::int64_t count = 0;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const bool stable = std::all_of(orbits[k].begin(), orbits[k].end(),
                                    [&](Point p) { return orbit_of[action.act(p, g)] == k; });
    if (stable) ++count;
  }
  return count;
}

}  // namespace permchar
