#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gs {

using Point = std::uint16_t;

/// Bijection on {0,...,d-1}. Points act on the right: apply(p) is the
/// image of p, and compose(u,v) applies u first, then v.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t degree);

  /// Validates that `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point apply(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }
  bool is_identity() const;

  Permutation inverse() const;

  /// Cycle notation on 1-based points, e.g. "(1 2)(3 4)"; "()" for identity.
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// u first, then v.
Permutation compose(const Permutation& u, const Permutation& v);

inline constexpr std::size_t kDefaultOrderCap = 1'000'000;

/// Order of the permutation group generated by `generators`, by
/// breadth-first closure under composition. All generators must share one
/// degree. Throws OrderCapExceeded if the closure grows past `cap`.
std::uint64_t perm_group_order(const std::vector<Permutation>& generators,
                               std::size_t cap = kDefaultOrderCap);

/// Orbit of `basepoint` under the group generated by `generators`, sorted.
std::vector<Point> orbit(const std::vector<Permutation>& generators, Point basepoint);

}  // namespace gs
