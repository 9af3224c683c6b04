#pragma once

#include <cstdint>
#include <vector>

#include "oortlab/group.hpp"

namespace oortlab {

/// N normal in G, checked by conjugating generators.
bool is_normal(const Group& G, const Group& N);

/// The map g -> (action of g on the left cosets of N).
///
/// Cosets are numbered in order of their canonical representative, the
/// lexicographically least permutation in the coset.
class QuotientMap {
 public:
  QuotientMap(Group source, Group kernel);

  const Group& source() const noexcept { return source_; }
  const Group& kernel() const noexcept { return kernel_; }
  std::size_t index() const noexcept { return reps_.size(); }

  /// Coset number of g (g must lie in the source group).
  std::uint32_t coset_of(const Permutation& g) const;
  /// Canonical representative of coset `c`.
  const Permutation& representative(std::uint32_t c) const;

  Permutation image(const Permutation& g) const;
  /// A preimage of a permutation of the quotient.
  Permutation lift(const Permutation& q) const;

 private:
  Group source_;
  Group kernel_;
  std::vector<std::uint32_t> coset_;  // source table index -> coset number
  std::vector<std::uint32_t> reps_;   // coset number -> source table index
};

struct Quotient {
  Group group;
  QuotientMap map;
};

/// G/N as the permutation action of G on the cosets of N. Throws NotNormal,
/// CapExceeded (G must be enumerable) or TooLarge (index above the degree limit).
Quotient quotient_by(const Group& G, const Group& N);

}  // namespace oortlab
