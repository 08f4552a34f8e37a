#include "permchar/theorems.hpp"

#include <algorithm>
#include <set>

#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"

namespace permchar {
namespace {

std::string group_key(const PermGroup& group) { return group.name().empty() ? "G" : group.name(); }

void require_normal(const PermGroup& group, const SubgroupHandle& n) {
  require_subgroup(group, n);
  if (!is_normal(group, n)) {
    throw Error(ErrorCode::NotNormal, "<" + n.label() + "> is not normal in " + describe_group(group));
  }
}

std::int64_t rhs_sum(const PermGroup& group, const PermutationCharacter& chi_u, const SubgroupHandle& n,
                     ElementIndex g) {
  std::int64_t sum = 0;
  for (ElementIndex x : n.members()) sum += chi_u.value_at(group.multiply(g, x));
  return sum;
}

LemmaCheck lemma_from_characters(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n,
                                 const PermutationCharacter& chi_u, const PermutationCharacter& chi_un,
                                 ElementIndex g) {
  LemmaCheck check;
  check.group = group_key(group);
  check.u = u.label();
  check.n = n.label();
  check.g = group.element(g);
  check.lhs = chi_un.value_at(g);
  check.rhs_numerator = rhs_sum(group, chi_u, n, g);
  check.n_order = static_cast<std::int64_t>(n.order());
  check.holds = check.rhs().equals(check.lhs);
  return check;
}

}  // namespace

LemmaCheck check_lemma_avg(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n,
                           const Permutation& g) {
  require_subgroup(group, u);
  require_normal(group, n);
  const ElementIndex gi = group.index_of(g);
  const SubgroupHandle un = subgroup_product(group, u, n);
  const ActionHom on_un = coset_action(group, un);
  const PermutationCharacter chi_u = perm_character(group, u);

  LemmaCheck check;
  check.group = group_key(group);
  check.u = u.label();
  check.n = n.label();
  check.g = g;
  check.lhs = fixed_points(on_un, gi);
  check.rhs_numerator = rhs_sum(group, chi_u, n, gi);
  check.n_order = static_cast<std::int64_t>(n.order());
  check.holds = check.rhs().equals(check.lhs);
  return check;
}

std::vector<LemmaCheck> check_lemma_all(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n,
                                        bool pointwise) {
  require_subgroup(group, u);
  require_normal(group, n);
  const PermutationCharacter chi_u = perm_character(group, u);
  const PermutationCharacter chi_un = perm_character(group, subgroup_product(group, u, n));
  std::vector<LemmaCheck> out;
  if (pointwise) {
    // Pointwise mode reads fixed points per element instead of class values.
    const ActionHom on_u = coset_action(group, u);
    const ActionHom on_un = coset_action(group, subgroup_product(group, u, n));
    for (ElementIndex g = 0; g < group.order(); ++g) {
      LemmaCheck check = lemma_from_characters(group, u, n, chi_u, chi_un, g);
      check.lhs = fixed_points(on_un, g);
      check.rhs_numerator = 0;
      for (ElementIndex x : n.members()) check.rhs_numerator += fixed_points(on_u, group.multiply(g, x));
      check.holds = check.rhs().equals(check.lhs);
      out.push_back(std::move(check));
    }
    return out;
  }
  for (const auto& cls : group.classes()) {
    out.push_back(lemma_from_characters(group, u, n, chi_u, chi_un, cls.representative));
  }
  return out;
}

FgsCheck check_fgs(const ActionHom& action, const SubgroupHandle& n, const Permutation& g) {
  const PermGroup& group = action.parent();
  require_subgroup(group, n);
  const ElementIndex gi = group.index_of(g);
  const SubgroupHandle h = generated_with(group, n, g);
  if (!is_normal_in(n, h)) {
    throw Error(ErrorCode::NotNormalInGeneratedH,
                "<" + n.label() + "> is not normal in <" + h.label() + ">");
  }
  FgsCheck check;
  check.group = group_key(group);
  check.action = action.space().subgroup().label();
  check.h = h.label();
  check.n = n.label();
  check.g = g;
  for (ElementIndex x : n.members()) check.fixed_point_sum += fixed_points(action, group.multiply(gi, x));
  check.n_order = static_cast<std::int64_t>(n.order());
  check.r = nonsplit_orbit_count(action, h, n);
  check.holds = check.average().equals(check.r);
  return check;
}

LemmaCheck check_lemma_via_fgs(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n,
                               const Permutation& g) {
  LemmaCheck check = check_lemma_avg(group, u, n, g);
  const ElementIndex gi = group.index_of(g);
  const ActionHom on_u = coset_action(group, u);
  const SubgroupHandle h = generated_with(group, n, g);

  OrbitRoute route;
  route.direct_value = check.lhs;
  route.fixed_n_orbits = fixed_orbit_count(on_u, orbits_of_subgroup(on_u, n), gi);
  route.nonsplit_orbits = nonsplit_orbit_count(on_u, h, n);
  route.h = h.label();
  check.lhs = route.fixed_n_orbits;
  check.holds = check.holds && route.fixed_n_orbits == route.direct_value &&
                route.nonsplit_orbits == route.fixed_n_orbits && check.rhs().equals(route.fixed_n_orbits);
  check.route = std::move(route);
  return check;
}

TheoremCheck check_theorem(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& v,
                           const SubgroupHandle& n) {
  require_subgroup(group, u);
  require_subgroup(group, v);
  require_normal(group, n);
  TheoremCheck check;
  check.group = group_key(group);
  check.u = u.label();
  check.v = v.label();
  check.n = n.label();
  check.hypothesis_holds = characters_equal(perm_character(group, u), perm_character(group, v));
  check.conclusion_holds = characters_equal(perm_character(group, subgroup_product(group, u, n)),
                                            perm_character(group, subgroup_product(group, v, n)));
  check.vacuous = !check.hypothesis_holds;
  return check;
}

std::optional<KlingenWitness> falsify_klingen_step(const PermGroup& group, const SubgroupHandle& u,
                                                   const SubgroupHandle& n) {
  require_subgroup(group, u);
  require_normal(group, n);
  const PermutationCharacter chi_u = perm_character(group, u);
  const PermutationCharacter chi_un = perm_character(group, subgroup_product(group, u, n));
  for (ElementIndex x = 0; x < group.order(); ++x) {
    if (chi_un.value_at(x) > 0 && chi_u.value_at(x) == 0) {
      return KlingenWitness{group_key(group), u.label(), n.label(), group.element(x), chi_un.value_at(x),
                            chi_u.value_at(x)};
    }
  }
  return std::nullopt;
}

SubgroupTable::SubgroupTable(const PermGroup& group, std::size_t cap)
    : group_(group), subgroups_(subgroups(group, cap)) {
  actions_.reserve(subgroups_.size());
  characters_.reserve(subgroups_.size());
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    position_.emplace(std::vector<ElementIndex>(subgroups_[i].members().begin(), subgroups_[i].members().end()), i);
    actions_.push_back(coset_action(group_, subgroups_[i]));
    characters_.push_back(perm_character(actions_.back()));
    normal_.push_back(is_normal(group_, subgroups_[i]));
  }

  std::vector<ElementIndex> group_gens;
  for (const auto& g : group_.generators()) group_gens.push_back(group_.index_of(g));
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  conj_class_.assign(subgroups_.size(), kNone);
  std::size_t next_id = 0;
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (conj_class_[i] != kNone) continue;
    std::vector<std::size_t> orbit{i};
    conj_class_[i] = next_id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (ElementIndex h : group_gens) {
        const std::size_t j = conjugate_position(orbit[k], h);
        if (conj_class_[j] != kNone) continue;
        conj_class_[j] = next_id;
        orbit.push_back(j);
      }
    }
    ++next_id;
  }
}

std::size_t SubgroupTable::position(std::span<const ElementIndex> members) const {
  const auto it = position_.find(std::vector<ElementIndex>(members.begin(), members.end()));
  if (it == position_.end()) throw Error(ErrorCode::NotASubgroup, "member set is not a tabulated subgroup");
  return it->second;
}

std::size_t SubgroupTable::conjugate_position(std::size_t i, ElementIndex h) const {
  std::vector<ElementIndex> members;
  members.reserve(subgroups_[i].order());
  for (ElementIndex x : subgroups_[i].members()) members.push_back(group_.conjugate(x, h));
  std::sort(members.begin(), members.end());
  return position(members);
}

std::vector<GassmannPair> gassmann_pairs(const PermGroup& group, std::size_t search_cap) {
  const SubgroupTable table(group, search_cap);

  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_character;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto values = table.character(i).values();
    by_character[std::vector<std::int64_t>(values.begin(), values.end())].push_back(i);
  }

  std::set<std::pair<std::size_t, std::size_t>> candidates;
  for (const auto& [values, members] : by_character) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (table.conjugacy_class(members[a]) != table.conjugacy_class(members[b])) {
          candidates.emplace(members[a], members[b]);
        }
      }
    }
  }

  // Candidates are visited in lexicographic order, so the first pair met in
  // each simultaneous-conjugacy orbit is its least member.
  std::vector<GassmannPair> out;
  std::set<std::pair<std::size_t, std::size_t>> covered;
  for (const auto& [i, j] : candidates) {
    if (covered.contains({i, j})) continue;
    for (ElementIndex h = 0; h < group.order(); ++h) {
      const std::size_t a = table.conjugate_position(i, h);
      const std::size_t b = table.conjugate_position(j, h);
      covered.emplace(std::min(a, b), std::max(a, b));
    }
    const auto values = table.character(i).values();
    out.push_back({table.subgroup(i), table.subgroup(j), std::vector<std::int64_t>(values.begin(), values.end())});
  }
  return out;
}

}  // namespace permchar
