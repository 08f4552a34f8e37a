#include "permchar/permutation.hpp"

#include <numeric>
#include <string>

#include "permchar/error.hpp"

namespace permchar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::NonPositivePoint: return "NonPositivePoint";
    case ErrorCode::RepeatedPoint: return "RepeatedPoint";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::SweepCapExceeded: return "SweepCapExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotNormalInH: return "NotNormalInH";
    case ErrorCode::NotNormalInGeneratedH: return "NotNormalInGeneratedH";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::CatalogOrderMismatch: return "CatalogOrderMismatch";
    case ErrorCode::ProductOverflow: return "ProductOverflow";
  }
  return "Unknown";
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw Error(ErrorCode::NotABijection, "empty image array");
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point x = images[i];
    if (x >= images.size()) {
      throw Error(ErrorCode::NotABijection,
                  "image " + std::to_string(x) + " of point " + std::to_string(i) + " is out of range");
    }
    if (seen[x]) throw Error(ErrorCode::NotABijection, "image " + std::to_string(x) + " occurs twice");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept { return first_moved_point() == degree(); }

Point Permutation::first_moved_point() const noexcept {
  for (Point i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return static_cast<Point>(images_.size());
}

std::uint64_t Permutation::element_order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t order = 1;
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation perm_from_images(std::vector<Point> images) {
  return Permutation::from_images(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorCode::DegreeMismatch,
                "cannot compose degree " + std::to_string(p.degree()) + " with degree " +
                    std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i) images[i] = q(p(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < images.size(); ++i) images[p(i)] = i;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& h) {
  return compose(compose(h, p), inverse(h));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace permchar
