#pragma once

// Index-level helpers over an ElementTable. Internal to the library.

#include <cstdint>
#include <vector>

#include "oortlab/group.hpp"

namespace oortlab::detail {

using Index = std::uint32_t;

/// g x g^-1 as table indices.
Index conj(const ElementTable& t, Index g, Index x);

/// Sorted element set of the subgroup generated by `gens`.
std::vector<Index> closure(const ElementTable& t, const std::vector<Index>& gens);

/// x^0, x^1, ..., x^(n-1).
std::vector<Index> powers(const ElementTable& t, Index x);

std::vector<char> mask_of(std::size_t n, const std::vector<Index>& members);

/// Elements g of `domain` (all of t when null) with g s g^-1 in the masked subgroup
/// for every s in `gens`.
std::vector<Index> normalizing(const ElementTable& t, const std::vector<char>& mask,
                               const std::vector<Index>& gens,
                               const std::vector<Index>* domain = nullptr);

/// Elements of `domain` (all of t when null) commuting with every s in `gens`.
std::vector<Index> centralizing(const ElementTable& t, const std::vector<Index>& gens,
                                const std::vector<Index>* domain = nullptr);

/// Table indices of H's generators (H <= the group owning t).
std::vector<Index> generator_indices(const ElementTable& t, const Group& H);

bool commute(const Permutation& a, const Permutation& b);

}  // namespace oortlab::detail
