#include "permchar/stabilizer_chain.hpp"

#include <algorithm>

#include "permchar/error.hpp"

namespace permchar {

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators) : degree_(degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::DegreeMismatch, "generator degree " + std::to_string(g.degree()) +
                                                 " differs from chain degree " + std::to_string(degree));
    }
    if (g.is_identity()) continue;
    if (std::find(strong_gens_.begin(), strong_gens_.end(), g) != strong_gens_.end()) continue;
    strong_gens_.push_back(g);
    if (fixes_base_prefix(g, base_.size())) base_.push_back(g.first_moved_point());
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) rebuild_level(i);
  schreier_sims();
}

bool StabilizerChain::fixes_base_prefix(const Permutation& g, std::size_t length) const {
  for (std::size_t i = 0; i < length; ++i) {
    if (g(base_[i]) != base_[i]) return false;
  }
  return true;
}

void StabilizerChain::rebuild_level(std::size_t level) {
  Level& lv = levels_[level];
  lv.base_point = base_[level];
  lv.transversal.assign(degree_, std::nullopt);
  lv.orbit.clear();

  std::vector<const Permutation*> gens;
  for (const auto& s : strong_gens_) {
    if (fixes_base_prefix(s, level)) gens.push_back(&s);
  }

  lv.transversal[lv.base_point] = Permutation::identity(degree_);
  lv.orbit.push_back(lv.base_point);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const Point b = lv.orbit[k];
    for (const Permutation* s : gens) {
      const Point c = (*s)(b);
      if (lv.transversal[c]) continue;
      lv.transversal[c] = compose(*lv.transversal[b], *s);
      lv.orbit.push_back(c);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t level) const {
  for (std::size_t i = level; i < levels_.size(); ++i) {
    const Point b = g(levels_[i].base_point);
    const auto& u = levels_[i].transversal[b];
    if (!u) return {std::move(g), i};
    g = compose(g, inverse(*u));
  }
  return {std::move(g), levels_.size()};
}

// Holt's deterministic Schreier-Sims: walk levels bottom-up, sift every
// Schreier generator of the current level through the levels below it, and
// restart from the level where a non-trivial residue was inserted.
void StabilizerChain::schreier_sims() {
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t level = i - 1;
    bool extended = false;
    const Level& lv = levels_[level];
    for (std::size_t k = 0; k < lv.orbit.size() && !extended; ++k) {
      const Point b = lv.orbit[k];
      for (std::size_t s_idx = 0; s_idx < strong_gens_.size(); ++s_idx) {
        const Permutation& s = strong_gens_[s_idx];
        if (!fixes_base_prefix(s, level)) continue;
        const Permutation schreier = compose(compose(*lv.transversal[b], s), inverse(*lv.transversal[s(b)]));
        auto [residue, stop] = strip(schreier, level + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          base_.push_back(residue.first_moved_point());
          levels_.emplace_back();
        }
        strong_gens_.push_back(std::move(residue));
        for (std::size_t l = level + 1; l <= stop; ++l) rebuild_level(l);
        i = stop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

std::vector<std::uint64_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::uint64_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t order = 1;
  for (const auto& lv : levels_) {
    if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(lv.orbit.size()), &order)) {
      throw Error(ErrorCode::ProductOverflow, "group order exceeds 2^64");
    }
  }
  return order;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return strip(p, 0).first.is_identity();
}

}  // namespace permchar
