#include "permchar/sweep.hpp"

#include <chrono>
#include <future>
#include <map>

#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"

namespace permchar {

SweepCounts& SweepCounts::operator+=(const SweepCounts& o) {
  order_checks += o.order_checks;
  lemma_class_checks += o.lemma_class_checks;
  lemma_pointwise_checks += o.lemma_pointwise_checks;
  route_checks += o.route_checks;
  fgs_checks += o.fgs_checks;
  theorem_checks += o.theorem_checks;
  theorem_nonconjugate += o.theorem_nonconjugate;
  frobenius_checks += o.frobenius_checks;
  equality_oracle_checks += o.equality_oracle_checks;
  return *this;
}

namespace {

std::string angle(const SubgroupHandle& s) { return "<" + s.label() + ">"; }

class GroupSweeper {
 public:
  GroupSweeper(const PermGroup& group, const SweepOptions& options, std::size_t cap)
      : group_(group), options_(options), table_(group, cap) {
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (table_.normal(i)) normals_.push_back(i);
    }
    out_.group = group.name().empty() ? "G" : group.name();
    out_.order = group.order();
    out_.degree = group.degree();
    out_.classes = group.classes().size();
    out_.subgroups = table_.size();
    out_.normal_subgroups = normals_.size();
  }

  GroupSweep run_full() {
    out_.scope = "full";
    check_order();
    check_oracles();
    for (std::size_t u = 0; u < table_.size(); ++u) {
      for (std::size_t n : normals_) {
        const std::size_t un = table_.position(subgroup_product(group_, table_.subgroup(u), table_.subgroup(n)));
        check_lemma(u, n, un);
        check_route_and_fgs(u, n, un);
      }
    }
    check_theorem();
    return std::move(out_);
  }

  GroupSweep run_theorem_only() {
    out_.scope = "theorem-only";
    check_order();
    check_theorem();
    return std::move(out_);
  }

 private:
  void violation(std::string check, std::string instance, std::string detail) {
    out_.violations.push_back({std::move(check), out_.group, std::move(instance), std::move(detail)});
  }

  std::string key(std::size_t u, std::size_t n, ElementIndex g) const {
    return "U=" + angle(table_.subgroup(u)) + " N=" + angle(table_.subgroup(n)) +
           " g=" + to_cycle_string(group_.element(g));
  }

  void check_order() {
    out_.chain_order = order_by_stabilizer_chain(group_);
    ++out_.counts.order_checks;
    if (out_.chain_order != group_.order()) {
      violation("order", "", "enumerated " + std::to_string(group_.order()) + " but stabilizer chain gives " +
                                 std::to_string(out_.chain_order));
    }
  }

  // Frobenius formula vs fixed points, and classwise vs pointwise equality.
  void check_oracles() {
    if (group_.order() > options_.pointwise_cap) return;
    for (std::size_t u = 0; u < table_.size(); ++u) {
      const auto& chi = table_.character(u);
      for (ElementIndex g = 0; g < group_.order(); ++g) {
        const std::int64_t by_fixed = fixed_points(table_.action(u), g);
        const std::int64_t by_formula = frobenius_character_value(group_, table_.subgroup(u), g);
        ++out_.counts.frobenius_checks;
        if (by_fixed != by_formula || by_fixed != chi.value_at(g)) {
          violation("frobenius", "U=" + angle(table_.subgroup(u)) + " g=" + to_cycle_string(group_.element(g)),
                    "fixed points " + std::to_string(by_fixed) + ", formula " + std::to_string(by_formula) +
                        ", class value " + std::to_string(chi.value_at(g)));
        }
      }
      for (std::size_t v = u; v < table_.size(); ++v) {
        ++out_.counts.equality_oracle_checks;
        const bool classwise = characters_equal(chi, table_.character(v));
        const bool pointwise = characters_equal_pointwise(chi, table_.character(v));
        if (classwise != pointwise) {
          violation("character-equality", "U=" + angle(table_.subgroup(u)) + " V=" + angle(table_.subgroup(v)),
                    "classwise and pointwise comparison disagree");
        }
      }
    }
  }

  void check_lemma(std::size_t u, std::size_t n, std::size_t un) {
    const auto& chi_u = table_.character(u);
    const auto& chi_un = table_.character(un);
    const SubgroupHandle& nsub = table_.subgroup(n);
    const auto n_order = static_cast<std::int64_t>(nsub.order());
    for (const auto& cls : group_.classes()) {
      const ElementIndex g = cls.representative;
      std::int64_t sum = 0;
      for (ElementIndex x : nsub.members()) sum += chi_u.value_at(group_.multiply(g, x));
      ++out_.counts.lemma_class_checks;
      if (sum % n_order != 0 || sum != chi_un.value_at(g) * n_order) {
        violation("lemma", key(u, n, g),
                  "lhs " + std::to_string(chi_un.value_at(g)) + ", rhs " + Fraction{sum, n_order}.to_string());
      }
    }
    if (group_.order() > options_.pointwise_cap) return;
    const ActionHom& on_u = table_.action(u);
    const ActionHom& on_un = table_.action(un);
    for (ElementIndex g = 0; g < group_.order(); ++g) {
      std::int64_t sum = 0;
      for (ElementIndex x : nsub.members()) sum += fixed_points(on_u, group_.multiply(g, x));
      const std::int64_t lhs = fixed_points(on_un, g);
      ++out_.counts.lemma_pointwise_checks;
      if (sum != lhs * n_order) {
        violation("lemma-pointwise", key(u, n, g), "lhs " + std::to_string(lhs) + ", rhs " +
                                                       Fraction{sum, n_order}.to_string());
      }
    }
  }

  const SubgroupHandle& generated(std::size_t n, ElementIndex g) {
    const auto k = std::make_pair(n, g);
    auto it = generated_.find(k);
    if (it == generated_.end()) {
      it = generated_.emplace(k, generated_with(group_, table_.subgroup(n), group_.element(g))).first;
    }
    return it->second;
  }

  void check_route_and_fgs(std::size_t u, std::size_t n, std::size_t un) {
    const ActionHom& on_u = table_.action(u);
    const SubgroupHandle& nsub = table_.subgroup(n);
    const auto n_order = static_cast<std::int64_t>(nsub.order());
    const OrbitPartition n_orbits = orbits_of_subgroup(on_u, nsub);

    auto average_numerator = [&](ElementIndex g) {
      std::int64_t sum = 0;
      for (ElementIndex x : nsub.members()) sum += fixed_points(on_u, group_.multiply(g, x));
      return sum;
    };

    for (const auto& cls : group_.classes()) {
      const ElementIndex g = cls.representative;
      const std::int64_t direct = table_.character(un).value_at(g);
      const std::int64_t fixed = fixed_orbit_count(on_u, n_orbits, g);
      const std::int64_t r = nonsplit_orbit_count(on_u, generated(n, g), nsub);
      const std::int64_t sum = average_numerator(g);
      ++out_.counts.route_checks;
      if (direct != fixed || fixed != r || sum != r * n_order) {
        violation("orbit-route", key(u, n, g),
                  "direct " + std::to_string(direct) + ", fixed N-orbits " + std::to_string(fixed) +
                      ", non-split " + std::to_string(r) + ", average " + Fraction{sum, n_order}.to_string());
      }
    }

    for (ElementIndex g = 0; g < group_.order(); ++g) {
      const SubgroupHandle& h = generated(n, g);
      const std::int64_t r = nonsplit_orbit_count(on_u, h, nsub);
      const std::int64_t sum = average_numerator(g);
      ++out_.counts.fgs_checks;
      if (sum != r * n_order) {
        violation("fgs", key(u, n, g) + " H=" + angle(h),
                  "average " + Fraction{sum, n_order}.to_string() + ", r " + std::to_string(r));
      }
    }
  }

  void check_theorem() {
    for (std::size_t n : normals_) {
      std::vector<std::size_t> product(table_.size());
      for (std::size_t u = 0; u < table_.size(); ++u) {
        product[u] = table_.position(subgroup_product(group_, table_.subgroup(u), table_.subgroup(n)));
      }
      for (std::size_t u = 0; u < table_.size(); ++u) {
        for (std::size_t v = u + 1; v < table_.size(); ++v) {
          if (!characters_equal(table_.character(u), table_.character(v))) continue;
          ++out_.counts.theorem_checks;
          if (table_.conjugacy_class(u) != table_.conjugacy_class(v)) ++out_.counts.theorem_nonconjugate;
          if (!characters_equal(table_.character(product[u]), table_.character(product[v]))) {
            violation("theorem",
                      "U=" + angle(table_.subgroup(u)) + " V=" + angle(table_.subgroup(v)) +
                          " N=" + angle(table_.subgroup(n)),
                      "1_U^G = 1_V^G but 1_UN^G != 1_VN^G");
          }
        }
      }
    }
  }

  const PermGroup& group_;
  const SweepOptions& options_;
  SubgroupTable table_;
  std::vector<std::size_t> normals_;
  std::map<std::pair<std::size_t, ElementIndex>, SubgroupHandle> generated_;
  GroupSweep out_;
};

}  // namespace

GroupSweep sweep_group(const PermGroup& group, const SweepOptions& options) {
  if (group.order() <= options.sweep_cap) return GroupSweeper(group, options, options.sweep_cap).run_full();
  if (group.order() <= options.theorem_cap) {
    return GroupSweeper(group, options, options.theorem_cap).run_theorem_only();
  }
  throw Error(ErrorCode::SweepCapExceeded, describe_group(group) + " exceeds the theorem cap " +
                                               std::to_string(options.theorem_cap));
}

SweepReport sweep(std::span<const PermGroup> universe, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.sweep_cap = options.sweep_cap;
  report.theorem_cap = options.theorem_cap;

  std::size_t limit = universe.size();
  for (std::size_t i = 0; i < universe.size(); ++i) {
    report.universe.push_back(universe[i].name().empty() ? "G" : universe[i].name());
    if (universe[i].order() > options.theorem_cap && limit == universe.size()) {
      limit = i;
      report.truncated = "stopped at " + describe_group(universe[i]) + ": order exceeds the theorem cap " +
                         std::to_string(options.theorem_cap);
    }
  }

  std::vector<GroupSweep> results(limit);
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < limit; ++i) results[i] = sweep_group(universe[i], options);
  } else {
    for (std::size_t begin = 0; begin < limit; begin += threads) {
      std::vector<std::future<GroupSweep>> batch;
      for (std::size_t i = begin; i < std::min<std::size_t>(limit, begin + threads); ++i) {
        batch.push_back(std::async(std::launch::async, [&, i] { return sweep_group(universe[i], options); }));
      }
      for (std::size_t k = 0; k < batch.size(); ++k) results[begin + k] = batch[k].get();
    }
  }

  for (auto& g : results) {
    report.totals += g.counts;
    report.violations.insert(report.violations.end(), g.violations.begin(), g.violations.end());
    report.groups.push_back(std::move(g));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace permchar
