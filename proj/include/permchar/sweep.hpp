#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permchar/perm_group.hpp"
#include "permchar/theorems.hpp"

namespace permchar {

struct SweepOptions {
  /// Groups up to this order get every lemma, orbit-route, FGS and oracle check.
  std::size_t sweep_cap = kDefaultSweepCap;
  /// Larger groups up to this order only get the normal-subgroup theorem sweep.
  std::size_t theorem_cap = kDefaultGassmannCap;
  /// Element-by-element cross-checks run for groups up to this order.
  std::size_t pointwise_cap = kDefaultSweepCap;
  unsigned threads = 1;
};

struct SweepCounts {
  std::uint64_t order_checks = 0;
  std::uint64_t lemma_class_checks = 0;
  std::uint64_t lemma_pointwise_checks = 0;
  std::uint64_t route_checks = 0;
  std::uint64_t fgs_checks = 0;
  std::uint64_t theorem_checks = 0;       // pairs with equal characters, per normal subgroup
  std::uint64_t theorem_nonconjugate = 0; // of those, pairs of non-conjugate subgroups
  std::uint64_t frobenius_checks = 0;
  std::uint64_t equality_oracle_checks = 0;

  SweepCounts& operator+=(const SweepCounts& other);
  friend bool operator==(const SweepCounts&, const SweepCounts&) = default;
};

struct Violation {
  std::string check;
  std::string group;
  std::string instance;
  std::string detail;
};

struct GroupSweep {
  std::string group;
  std::size_t order = 0;
  std::size_t degree = 0;
  std::uint64_t chain_order = 0;
  std::size_t classes = 0;
  std::size_t subgroups = 0;
  std::size_t normal_subgroups = 0;
  std::string scope;  // "full" or "theorem-only"
  SweepCounts counts;
  std::vector<Violation> violations;
};

struct SweepReport {
  std::vector<std::string> universe;
  std::size_t sweep_cap = 0;
  std::size_t theorem_cap = 0;
  std::vector<GroupSweep> groups;
  SweepCounts totals;
  std::vector<Violation> violations;
  /// Empty unless the sweep stopped early at a group past theorem_cap.
  std::string truncated;
  double wall_seconds = 0.0;

  bool clean() const noexcept { return violations.empty() && truncated.empty(); }
};

/// Runs every check on one group. Throws Error(SweepCapExceeded) past theorem_cap.
GroupSweep sweep_group(const PermGroup& group, const SweepOptions& options);

/// Sweeps the groups in order. A group past theorem_cap stops the sweep and
/// marks the report truncated; results already gathered are kept. Results are
/// merged in universe order whatever the thread count.
SweepReport sweep(std::span<const PermGroup> universe, const SweepOptions& options = {});

}  // namespace permchar
