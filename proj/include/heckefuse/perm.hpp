#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heckefuse {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1}, stored by its image tuple.
///
/// Composition is function composition: (a * b)(i) = a(b(i)).  Permutations
/// compare lexicographically on their image tuples, which fixes the canonical
/// element order of every group in the library.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1)(2 3)"; fixed points may be omitted
  /// and "()" or "e" denote the identity.
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;

  /// Cycle notation with fixed points omitted; the identity prints as "()".
  std::string to_cycles() const;

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

}  // namespace heckefuse
