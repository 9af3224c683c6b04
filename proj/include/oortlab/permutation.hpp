#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace oortlab {

using Point = std::uint16_t;

/// Largest supported degree; points must fit in a Point.
inline constexpr std::size_t kMaxDegree = 65535;

/// A bijection of {0, ..., degree-1}, stored as its image table.
///
/// Composition is right-to-left: (a * b)(x) == a(b(x)).
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws RangeError otherwise.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0, 1}, {2, 3, 4}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Lowest point not fixed, or degree() for the identity.
  std::size_t first_moved_point() const noexcept;

  /// Cycle notation with 0-based points, "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation inverse(const Permutation& a);

  std::vector<Point> images_;
};

/// a after b: (a * b)(x) = a(b(x)). Throws DegreeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// g * h * g^-1
Permutation conjugate(const Permutation& g, const Permutation& h);

/// Commutator a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// a^k for any integer k.
Permutation power(const Permutation& a, long long k);

/// Least common multiple of the cycle lengths. Throws TooLarge on overflow.
std::uint64_t element_order(const Permutation& a);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace oortlab
