#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permchar/permutation.hpp"

namespace permchar {

/// Position of an element in its group's sorted element list.
using ElementIndex = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 200'000;
inline constexpr std::size_t kDefaultSweepCap = 48;

struct ConjugacyClass {
  ElementIndex representative;  // least member in the element order
  std::vector<ElementIndex> members;  // sorted
};

/// A finite permutation group with every element enumerated up front.
///
/// Cheap to copy: copies share the immutable enumeration. Elements are kept
/// sorted, so index 0 is always the identity. Groups of order up to
/// kTableLimit also carry a full multiplication table.
class PermGroup {
 public:
  static constexpr std::size_t kTableLimit = 1024;

  std::size_t degree() const noexcept;
  const std::string& name() const noexcept { return name_; }
  std::span<const Permutation> generators() const noexcept;
  std::span<const Permutation> elements() const noexcept;
  std::size_t order() const noexcept;
  std::span<const ConjugacyClass> classes() const noexcept;
  std::size_t class_of(ElementIndex x) const noexcept;

  const Permutation& element(ElementIndex x) const noexcept { return elements()[x]; }
  std::optional<ElementIndex> find(const Permutation& p) const;
  /// Throws Error(NotInGroup) or Error(DegreeMismatch).
  ElementIndex index_of(const Permutation& p) const;

  /// Index of element(a) * element(b), applying a first.
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse_of(ElementIndex a) const noexcept;
  /// Index of h * x * h^-1.
  ElementIndex conjugate(ElementIndex x, ElementIndex h) const;

  /// True when both handles describe the same element set on the same degree.
  bool same_as(const PermGroup& other) const noexcept;
  PermGroup renamed(std::string name) const;

 private:
  struct Impl;
  friend PermGroup group_from_generators(std::size_t, std::vector<Permutation>, std::size_t, std::string);

  PermGroup(std::shared_ptr<const Impl> impl, std::string name) : impl_(std::move(impl)), name_(std::move(name)) {}

  std::shared_ptr<const Impl> impl_;
  std::string name_;
};

/// A subgroup of a fixed parent, held as the sorted indices of its members.
class SubgroupHandle {
 public:
  /// The subgroup of `parent` generated by `generators`; throws Error(NotInGroup).
  static SubgroupHandle generated(const PermGroup& parent, std::vector<Permutation> generators);

  const PermGroup& parent() const noexcept { return parent_; }
  std::span<const Permutation> generators() const noexcept { return data_->generators; }
  std::span<const ElementIndex> members() const noexcept { return data_->members; }
  std::vector<Permutation> elements() const;
  std::size_t order() const noexcept { return data_->members.size(); }

  bool contains(ElementIndex x) const noexcept { return x < data_->mask.size() && data_->mask[x]; }
  bool contains(const Permutation& p) const;

  /// Generators in cycle notation separated by ";"; "" for no generators.
  std::string label() const;

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.parent_.same_as(b.parent_) && a.data_->members == b.data_->members;
  }
  /// Order first, then the member list lexicographically.
  friend bool operator<(const SubgroupHandle& a, const SubgroupHandle& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.data_->members < b.data_->members;
  }

 private:
  struct Data {
    std::vector<Permutation> generators;
    std::vector<ElementIndex> members;
    std::vector<bool> mask;
  };
  friend SubgroupHandle make_subgroup(const PermGroup&, std::vector<Permutation>, std::vector<ElementIndex>);

  SubgroupHandle(PermGroup parent, std::shared_ptr<const Data> data)
      : parent_(std::move(parent)), data_(std::move(data)) {}

  PermGroup parent_;
  std::shared_ptr<const Data> data_;
};

/// "C4 (group of order 4 on 4 points)"; used in diagnostics.
std::string describe_group(const PermGroup& group);

/// Builds a handle from an already closed, sorted member list. No closure check.
SubgroupHandle make_subgroup(const PermGroup& parent, std::vector<Permutation> generators,
                             std::vector<ElementIndex> members);
/// Sorted indices of the subgroup generated by `generators` (indices into parent).
std::vector<ElementIndex> close_under_products(const PermGroup& parent, std::span<const ElementIndex> generators);

/// Breadth-first closure of the generators. Throws Error(OrderCapExceeded)
/// (with the partial count) once more than `order_cap` elements appear, and
/// Error(DegreeMismatch) for generators of another degree.
PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators,
                                std::size_t order_cap = kDefaultOrderCap, std::string name = {});

/// Order from a Schreier-Sims chain on the generators; ignores the enumeration.
std::uint64_t order_by_stabilizer_chain(const PermGroup& group);

bool contains(const PermGroup& group, const Permutation& p);
std::span<const ConjugacyClass> conjugacy_classes(const PermGroup& group);

SubgroupHandle trivial_subgroup(const PermGroup& group);
SubgroupHandle whole_group(const PermGroup& group);
/// Throws Error(NotASubgroup) unless `u` lives in `group`.
void require_subgroup(const PermGroup& group, const SubgroupHandle& u);

/// Every subgroup exactly once, sorted by order then member list.
/// Throws Error(SweepCapExceeded) when |G| > sweep_cap.
std::vector<SubgroupHandle> subgroups(const PermGroup& group, std::size_t sweep_cap = kDefaultSweepCap);
bool is_normal(const PermGroup& group, const SubgroupHandle& u);
std::vector<SubgroupHandle> normal_subgroups(const PermGroup& group, std::size_t sweep_cap = kDefaultSweepCap);
SubgroupHandle normal_closure(const PermGroup& group, std::span<const Permutation> seeds);
/// UN for N normal in G; throws Error(NotNormal) otherwise.
SubgroupHandle subgroup_product(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n);
/// <N, g>.
SubgroupHandle generated_with(const PermGroup& group, const SubgroupHandle& n, const Permutation& g);
/// Least h (in element order) with h U h^-1 = V, if any.
std::optional<Permutation> are_conjugate_subgroups(const PermGroup& group, const SubgroupHandle& u,
                                                   const SubgroupHandle& v);
/// G1 x G2 acting on disjoint blocks of points; G2 is shifted past G1's degree.
PermGroup direct_product(const PermGroup& g1, const PermGroup& g2, std::size_t order_cap = kDefaultOrderCap);

/// Least common multiple of the element orders.
std::uint64_t exponent(const PermGroup& group);
bool is_abelian(const PermGroup& group);

}  // namespace permchar
