#include "permchar/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"
#include "permchar/stabilizer_chain.hpp"

namespace permchar {

struct PermGroup::Impl {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index;
  std::vector<ElementIndex> inverse;
  std::vector<ElementIndex> table;  // order*order when order <= kTableLimit
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_of;
};

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
std::span<const Permutation> PermGroup::generators() const noexcept { return impl_->generators; }
std::span<const Permutation> PermGroup::elements() const noexcept { return impl_->elements; }
std::size_t PermGroup::order() const noexcept { return impl_->elements.size(); }
std::span<const ConjugacyClass> PermGroup::classes() const noexcept { return impl_->classes; }
std::size_t PermGroup::class_of(ElementIndex x) const noexcept { return impl_->class_of[x]; }

std::optional<ElementIndex> PermGroup::find(const Permutation& p) const {
  const auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

ElementIndex PermGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree()) {
    throw Error(ErrorCode::DegreeMismatch, "permutation of degree " + std::to_string(p.degree()) +
                                               " tested against a group of degree " + std::to_string(degree()));
  }
  const auto x = find(p);
  if (!x) throw Error(ErrorCode::NotInGroup, to_cycle_string(p) + " is not an element of " + describe_group(*this));
  return *x;
}

ElementIndex PermGroup::multiply(ElementIndex a, ElementIndex b) const {
  const Impl& im = *impl_;
  if (!im.table.empty()) return im.table[static_cast<std::size_t>(a) * im.elements.size() + b];
  return im.index.at(compose(im.elements[a], im.elements[b]));
}

ElementIndex PermGroup::inverse_of(ElementIndex a) const noexcept { return impl_->inverse[a]; }

ElementIndex PermGroup::conjugate(ElementIndex x, ElementIndex h) const {
  return multiply(multiply(h, x), inverse_of(h));
}

bool PermGroup::same_as(const PermGroup& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return degree() == other.degree() && impl_->elements == other.impl_->elements;
}

PermGroup PermGroup::renamed(std::string name) const { return PermGroup(impl_, std::move(name)); }

std::string describe_group(const PermGroup& group) {
  const std::string shape = "group of order " + std::to_string(group.order()) + " on " +
                            std::to_string(group.degree()) + " points";
  return group.name().empty() ? shape : group.name() + " (" + shape + ")";
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators, std::size_t order_cap,
                                std::string name) {
  if (degree == 0) throw Error(ErrorCode::DegreeMismatch, "degree must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator " + to_cycle_string(g) + " has degree " +
                                                 std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
  }

  auto impl = std::make_shared<PermGroup::Impl>();
  impl->degree = degree;
  impl->generators = generators;

  std::unordered_map<Permutation, ElementIndex, PermutationHash> seen;
  std::vector<Permutation> found{Permutation::identity(degree)};
  seen.emplace(found.front(), 0);
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& g : generators) {
      Permutation next = compose(found[k], g);
      if (seen.contains(next)) continue;
      if (found.size() >= order_cap) {
        throw Error(ErrorCode::OrderCapExceeded, "closure passed the order cap " + std::to_string(order_cap) +
                                                     " after " + std::to_string(found.size() + 1) + " elements");
      }
      seen.emplace(next, static_cast<ElementIndex>(found.size()));
      found.push_back(std::move(next));
    }
  }
  seen.clear();

  std::sort(found.begin(), found.end());
  impl->elements = std::move(found);
  const std::size_t order = impl->elements.size();
  impl->index.reserve(order);
  for (ElementIndex i = 0; i < order; ++i) impl->index.emplace(impl->elements[i], i);

  impl->inverse.resize(order);
  for (ElementIndex i = 0; i < order; ++i) impl->inverse[i] = impl->index.at(inverse(impl->elements[i]));
  if (order <= PermGroup::kTableLimit) {
    impl->table.resize(order * order);
    for (ElementIndex a = 0; a < order; ++a) {
      for (ElementIndex b = 0; b < order; ++b) {
        impl->table[static_cast<std::size_t>(a) * order + b] =
            impl->index.at(compose(impl->elements[a], impl->elements[b]));
      }
    }
  }

  // Classes: orbits under conjugation by the generators, visited in element
  // order so the first member met is the least one.
  std::vector<ElementIndex> gen_index;
  for (const auto& g : impl->generators) gen_index.push_back(impl->index.at(g));
  PermGroup view(impl, {});
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  impl->class_of.assign(order, kUnassigned);
  for (ElementIndex x = 0; x < order; ++x) {
    if (impl->class_of[x] != kUnassigned) continue;
    const std::size_t c = impl->classes.size();
    ConjugacyClass cls{x, {x}};
    impl->class_of[x] = c;
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      for (ElementIndex g : gen_index) {
        const ElementIndex y = view.conjugate(cls.members[k], g);
        if (impl->class_of[y] != kUnassigned) continue;
        impl->class_of[y] = c;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    impl->classes.push_back(std::move(cls));
  }

  return PermGroup(std::move(impl), std::move(name));
}

std::uint64_t order_by_stabilizer_chain(const PermGroup& group) {
  return StabilizerChain(group.degree(), group.generators()).order();
}

bool contains(const PermGroup& group, const Permutation& p) {
  if (p.degree() != group.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "permutation of degree " + std::to_string(p.degree()) +
                                               " tested against a group of degree " + std::to_string(group.degree()));
  }
  return group.find(p).has_value();
}

std::span<const ConjugacyClass> conjugacy_classes(const PermGroup& group) { return group.classes(); }

std::vector<ElementIndex> close_under_products(const PermGroup& parent, std::span<const ElementIndex> generators) {
  std::vector<bool> mask(parent.order(), false);
  std::vector<ElementIndex> members{0};
  mask[0] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (ElementIndex g : generators) {
      const ElementIndex y = parent.multiply(members[k], g);
      if (mask[y]) continue;
      mask[y] = true;
      members.push_back(y);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

SubgroupHandle make_subgroup(const PermGroup& parent, std::vector<Permutation> generators,
                             std::vector<ElementIndex> members) {
  auto data = std::make_shared<SubgroupHandle::Data>();
  data->generators = std::move(generators);
  data->mask.assign(parent.order(), false);
  for (ElementIndex x : members) data->mask[x] = true;
  data->members = std::move(members);
  return SubgroupHandle(parent, std::move(data));
}

SubgroupHandle SubgroupHandle::generated(const PermGroup& parent, std::vector<Permutation> generators) {
  std::vector<ElementIndex> gen_index;
  for (const auto& g : generators) gen_index.push_back(parent.index_of(g));
  auto members = close_under_products(parent, gen_index);
  return make_subgroup(parent, std::move(generators), std::move(members));
}

std::vector<Permutation> SubgroupHandle::elements() const {
  std::vector<Permutation> out;
  out.reserve(order());
  for (ElementIndex x : members()) out.push_back(parent_.element(x));
  return out;
}

bool SubgroupHandle::contains(const Permutation& p) const {
  const auto x = parent_.find(p);
  return x && contains(*x);
}

std::string SubgroupHandle::label() const {
  std::string out;
  for (const auto& g : generators()) {
    if (!out.empty()) out += ';';
    out += to_cycle_string(g);
  }
  return out;
}

SubgroupHandle trivial_subgroup(const PermGroup& group) { return make_subgroup(group, {}, {0}); }

SubgroupHandle whole_group(const PermGroup& group) {
  std::vector<ElementIndex> all(group.order());
  std::iota(all.begin(), all.end(), ElementIndex{0});
  const auto gens = group.generators();
  return make_subgroup(group, {gens.begin(), gens.end()}, std::move(all));
}

void require_subgroup(const PermGroup& group, const SubgroupHandle& u) {
  if (!u.parent().same_as(group)) {
    throw Error(ErrorCode::NotASubgroup, "subgroup <" + u.label() + "> belongs to " + describe_group(u.parent()) +
                                             ", not to " + describe_group(group));
  }
}

PermGroup direct_product(const PermGroup& g1, const PermGroup& g2, std::size_t order_cap) {
  if (g1.order() > order_cap / g2.order()) {
    throw Error(ErrorCode::OrderCapExceeded, "direct product order " + std::to_string(g1.order()) + "*" +
                                                 std::to_string(g2.order()) + " passes the order cap " +
                                                 std::to_string(order_cap));
  }
  const std::size_t d1 = g1.degree();
  const std::size_t degree = d1 + g2.degree();
  std::vector<Permutation> gens;
  for (const auto& g : g1.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point i = 0; i < d1; ++i) images[i] = g(i);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  for (const auto& g : g2.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point i = 0; i < g2.degree(); ++i) images[d1 + i] = static_cast<Point>(d1 + g(i));
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  std::string name;
  if (!g1.name().empty() && !g2.name().empty()) name = g1.name() + "x" + g2.name();
  return group_from_generators(degree, std::move(gens), order_cap, std::move(name));
}

std::uint64_t exponent(const PermGroup& group) {
  std::uint64_t e = 1;
  for (const auto& cls : group.classes()) e = std::lcm(e, group.element(cls.representative).element_order());
  return e;
}

bool is_abelian(const PermGroup& group) { return group.classes().size() == group.order(); }

}  // namespace permchar
