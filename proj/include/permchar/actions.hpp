#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "permchar/perm_group.hpp"

namespace permchar {

/// The right cosets Ux of U in G. Coset i has representative reps()[i], the
/// least member of the coset; coset 0 is U itself.
class CosetSpace {
 public:
  const PermGroup& parent() const noexcept { return subgroup_.parent(); }
  const SubgroupHandle& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return reps_.size(); }
  std::span<const ElementIndex> rep_indices() const noexcept { return reps_; }
  std::vector<Permutation> reps() const;
  /// Coset containing element x of the parent.
  Point coset_of(ElementIndex x) const noexcept { return coset_of_[x]; }

 private:
  friend CosetSpace right_cosets(const PermGroup&, const SubgroupHandle&);
  explicit CosetSpace(SubgroupHandle u) : subgroup_(std::move(u)) {}

  SubgroupHandle subgroup_;
  std::vector<ElementIndex> reps_;
  std::vector<Point> coset_of_;
};

/// g acting on a coset space by Ux -> Uxg.
class ActionHom {
 public:
  const CosetSpace& space() const noexcept { return space_; }
  const PermGroup& parent() const noexcept { return space_.parent(); }
  std::size_t degree() const noexcept { return space_.size(); }

  Point act(Point coset, ElementIndex g) const;
  /// Induced permutation of coset indices. Throws Error(NotInGroup).
  Permutation image(const Permutation& g) const;
  Permutation image(ElementIndex g) const;

 private:
  friend ActionHom coset_action(const PermGroup&, const SubgroupHandle&);
  explicit ActionHom(CosetSpace space) : space_(std::move(space)) {}

  CosetSpace space_;
};

/// A permutation character stored by conjugacy class of its group.
class PermutationCharacter {
 public:
  PermutationCharacter(PermGroup group, std::vector<std::int64_t> class_values);

  const PermGroup& group() const noexcept { return group_; }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t degree() const noexcept { return values_.front(); }
  std::int64_t value_at(ElementIndex x) const noexcept { return values_[group_.class_of(x)]; }
  /// (1/|G|) sum of values over all elements, which counts orbits; returned exactly as (numerator, |G|).
  std::pair<std::int64_t, std::int64_t> inner_with_trivial() const;

 private:
  PermGroup group_;
  std::vector<std::int64_t> values_;
};

CosetSpace right_cosets(const PermGroup& group, const SubgroupHandle& u);
ActionHom coset_action(const PermGroup& group, const SubgroupHandle& u);

std::int64_t fixed_points(const ActionHom& action, const Permutation& g);
std::int64_t fixed_points(const ActionHom& action, ElementIndex g);

/// 1_U^G by fixed points of each class representative on the cosets of U.
PermutationCharacter perm_character(const PermGroup& group, const SubgroupHandle& u);
PermutationCharacter perm_character(const ActionHom& action);
/// 1_U^G(g) = |{x in G : x g x^-1 in U}| / |U|; no coset space involved.
std::int64_t frobenius_character_value(const PermGroup& group, const SubgroupHandle& u, ElementIndex g);

/// Classwise comparison. Throws Error(GroupMismatch).
bool characters_equal(const PermutationCharacter& a, const PermutationCharacter& b);
/// Comparison of the values on every element, not just on class representatives.
bool characters_equal_pointwise(const PermutationCharacter& a, const PermutationCharacter& b);
std::int64_t character_value(const PermutationCharacter& chi, const Permutation& g);

using OrbitPartition = std::vector<std::vector<Point>>;

/// Orbits of N on the coset space: each orbit sorted, orbits ordered by least point.
OrbitPartition orbits_of_subgroup(const ActionHom& action, const SubgroupHandle& n);
/// Number of H-orbits that coincide with a single N-orbit. Throws Error(NotNormalInH).
std::int64_t nonsplit_orbit_count(const ActionHom& action, const SubgroupHandle& h, const SubgroupHandle& n);
/// Number of orbits in `orbits` that g maps onto themselves.
std::int64_t fixed_orbit_count(const ActionHom& action, const OrbitPartition& orbits, ElementIndex g);

/// True when every member of `n` lies in `h` and n is normalized by h's generators.
bool is_normal_in(const SubgroupHandle& n, const SubgroupHandle& h);

}  // namespace permchar
