#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permchar/permutation.hpp"

namespace permchar {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Works directly on the generators and never enumerates the group, so it is
/// an independent route to the order of a PermGroup.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::span<const Point> base() const noexcept { return base_; }
  std::span<const Permutation> strong_generators() const noexcept { return strong_gens_; }
  /// Basic orbit lengths, one per base point.
  std::vector<std::uint64_t> orbit_lengths() const;

  /// Product of the basic orbit lengths. Throws Error(ProductOverflow) past 2^64.
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    Point base_point;
    // transversal[b] maps the base point to b; empty outside the basic orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<Point> orbit;
  };

  /// Strips `g` from `level`; returns the residue and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t level) const;
  void rebuild_level(std::size_t level);
  bool fixes_base_prefix(const Permutation& g, std::size_t length) const;
  void schreier_sims();

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_gens_;
  std::vector<Level> levels_;
};

}  // namespace permchar
