#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permchar/actions.hpp"
#include "permchar/perm_group.hpp"

namespace permchar {

inline constexpr std::size_t kDefaultGassmannCap = 400;

/// An unreduced quotient. Kept as given so "4/2" reads back as the sum over N
/// divided by |N|; equality is by cross-multiplication.
struct Fraction {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  bool equals(std::int64_t value) const noexcept { return numerator == value * denominator; }
  std::string to_string() const { return std::to_string(numerator) + "/" + std::to_string(denominator); }

  friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

/// Second route to 1_{UN}^G(g): g-stable N-orbits on the cosets of U, and the
/// H-orbits that do not split for H = <N, g>.
struct OrbitRoute {
  std::int64_t direct_value = 0;    // 1_{UN}^G(g) from the coset action of UN
  std::int64_t fixed_n_orbits = 0;  // N-orbits on cosets of U mapped to themselves by g
  std::int64_t nonsplit_orbits = 0; // H-orbits equal to a single N-orbit
  std::string h;                    // label of H = <N, g>
};

struct LemmaCheck {
  std::string group;
  std::string u;
  std::string n;
  Permutation g;
  std::int64_t lhs = 0;            // 1_{UN}^G(g)
  std::int64_t rhs_numerator = 0;  // sum over n in N of 1_U^G(gn)
  std::int64_t n_order = 1;
  std::optional<OrbitRoute> route;
  bool holds = false;

  Fraction rhs() const noexcept { return {rhs_numerator, n_order}; }
};

struct FgsCheck {
  std::string group;
  std::string action;  // label of the subgroup whose cosets form the acted-on set
  std::string h;
  std::string n;
  Permutation g;
  std::int64_t fixed_point_sum = 0;  // sum over n in N of pi(gn)
  std::int64_t n_order = 1;
  std::int64_t r = 0;
  bool holds = false;

  Fraction average() const noexcept { return {fixed_point_sum, n_order}; }
};

struct TheoremCheck {
  std::string group;
  std::string u;
  std::string v;
  std::string n;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool vacuous = true;

  bool violated() const noexcept { return hypothesis_holds && !conclusion_holds; }
};

/// An element with 1_{UN}^G(sigma) > 0 but 1_U^G(sigma) = 0.
struct KlingenWitness {
  std::string group;
  std::string u;
  std::string n;
  Permutation sigma;
  std::int64_t un_value = 0;
  std::int64_t u_value = 0;
};

struct GassmannPair {
  SubgroupHandle u;
  SubgroupHandle v;
  std::vector<std::int64_t> character;  // shared class values
};

/// Averaging identity 1_{UN}^G(g) = (1/|N|) sum_{n in N} 1_U^G(gn).
/// Throws NotASubgroup, NotNormal, NotInGroup.
LemmaCheck check_lemma_avg(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n,
                           const Permutation& g);
/// One check per class representative, or per element when `pointwise`.
std::vector<LemmaCheck> check_lemma_all(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n,
                                        bool pointwise = false);
/// (1/|N|) sum_{n in N} pi(gn) = r for H = <N, g> acting through `action`.
/// Throws Error(NotNormalInGeneratedH) when N is not normal in H.
FgsCheck check_fgs(const ActionHom& action, const SubgroupHandle& n, const Permutation& g);
/// The averaging identity with the left side recomputed through orbit splitting.
LemmaCheck check_lemma_via_fgs(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& n,
                               const Permutation& g);
TheoremCheck check_theorem(const PermGroup& group, const SubgroupHandle& u, const SubgroupHandle& v,
                           const SubgroupHandle& n);
/// Least such sigma in element order, if any.
std::optional<KlingenWitness> falsify_klingen_step(const PermGroup& group, const SubgroupHandle& u,
                                                   const SubgroupHandle& n);
/// Non-conjugate subgroup pairs with equal permutation characters, one per
/// orbit under simultaneous conjugation, each the lexicographically least pair
/// of its orbit (by position in subgroups()). Throws Error(SweepCapExceeded).
std::vector<GassmannPair> gassmann_pairs(const PermGroup& group, std::size_t search_cap = kDefaultGassmannCap);

/// Indexes the subgroups of one group with their coset actions and characters
/// so sweeps evaluate each character once.
class SubgroupTable {
 public:
  SubgroupTable(const PermGroup& group, std::size_t cap);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const SubgroupHandle& subgroup(std::size_t i) const noexcept { return subgroups_[i]; }
  const ActionHom& action(std::size_t i) const noexcept { return actions_[i]; }
  const PermutationCharacter& character(std::size_t i) const noexcept { return characters_[i]; }
  bool normal(std::size_t i) const noexcept { return normal_[i]; }
  /// Position of the subgroup with exactly these members.
  std::size_t position(std::span<const ElementIndex> members) const;
  std::size_t position(const SubgroupHandle& s) const { return position(s.members()); }
  /// Position of h U h^-1 where U = subgroup(i).
  std::size_t conjugate_position(std::size_t i, ElementIndex h) const;
  /// Conjugacy class id of each subgroup (ids follow first appearance).
  std::size_t conjugacy_class(std::size_t i) const noexcept { return conj_class_[i]; }

 private:
  PermGroup group_;
  std::vector<SubgroupHandle> subgroups_;
  std::vector<ActionHom> actions_;
  std::vector<PermutationCharacter> characters_;
  std::vector<bool> normal_;
  std::vector<std::size_t> conj_class_;
  std::map<std::vector<ElementIndex>, std::size_t> position_;
};

}  // namespace permchar
