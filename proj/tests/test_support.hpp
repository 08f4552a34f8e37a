#pragma once

#include <random>
#include <string_view>

#include "oracle.hpp"
#include "permchar/cycle_notation.hpp"
#include "permchar/perm_group.hpp"

namespace test {

inline permchar::Permutation cyc(std::string_view text, std::size_t degree) {
  return permchar::perm_from_cycles(text, degree);
}

inline oracle::Raw raw(const permchar::Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline oracle::RawGroup raw_set(const permchar::SubgroupHandle& s) {
  oracle::RawGroup out;
  for (const auto& p : s.elements()) out.insert(raw(p));
  return out;
}

inline oracle::RawGroup raw_group(const permchar::PermGroup& g) {
  oracle::RawGroup out;
  for (const auto& p : g.elements()) out.insert(raw(p));
  return out;
}

inline permchar::Permutation random_permutation(std::size_t degree, std::mt19937& rng) {
  std::vector<permchar::Point> images(degree);
  for (permchar::Point i = 0; i < degree; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return permchar::perm_from_images(std::move(images));
}

}  // namespace test
