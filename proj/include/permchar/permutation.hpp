#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace permchar {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products are read left to right: `compose(p, q)` applies p first, then q,
/// so points act on the right (`i^(pq) = (i^p)^q`). The total order on
/// permutations is lexicographic on the image array; the identity is the
/// least element of every degree.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  /// Throws Error(NotABijection) unless `images` is a permutation of 0..n-1.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  /// Least point moved, or degree() if this is the identity.
  Point first_moved_point() const noexcept;
  std::uint64_t element_order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
    return a.images_ <=> b.images_;
  }

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

Permutation perm_from_images(std::vector<Point> images);

/// Apply p, then q. Throws Error(DegreeMismatch).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// h * p * h^-1 in left-to-right notation.
Permutation conjugate(const Permutation& p, const Permutation& h);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace permchar
