#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "oortlab/group.hpp"

namespace oortlab {

/// Coordinates of an elementary abelian factor: canonical coset key (least
/// ambient table index in the coset) to a coordinate vector over GF(r).
struct FactorCoordinates {
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> by_key;
};

/// A G-chief factor upper/lower.
struct ChiefFactor {
  Group lower;
  Group upper;
  bool abelian = false;
  std::uint64_t r = 0;  // prime, when abelian
  unsigned d = 0;       // rank over GF(r), when abelian
  std::vector<Permutation> basis;
  std::shared_ptr<const FactorCoordinates> coordinates;  // null unless r^d <= kFactorLimit

  std::uint64_t order() const { return upper.order() / lower.order(); }
};

inline constexpr std::uint64_t kFactorLimit = 20000;

/// 1 = R0 < R1 < ... < Rt = R with every Ri normal in G and every Ri+1/Ri a chief
/// factor of G. Throws NotNormal, CapExceeded.
std::vector<ChiefFactor> chief_series_within(const Group& G, const Group& R);

/// Coordinate vector of h in `upper` modulo `lower`. Throws TooLarge without coordinates.
std::vector<std::uint32_t> factor_coordinates(const Group& G, const ChiefFactor& X,
                                              const Permutation& h);

struct FactorMatrix {
  std::vector<std::vector<std::uint32_t>> entries;  // entries[i][j]: row i, column j
  std::uint32_t trace_mod_r = 0;
  long long trace = 0;  // symmetric residue
};

/// Matrix of conjugation by g on X in the stored basis. Throws TooLarge when
/// r^d exceeds kFactorLimit, PreconditionFailed for non-abelian factors.
FactorMatrix factor_action(const Group& G, const ChiefFactor& X, const Permutation& g);

/// Rank of a matrix over GF(r).
unsigned rank_mod(std::vector<std::vector<std::uint32_t>> rows, std::uint64_t r);

/// True when the subgroup generated by `elements` fixes only 0 in X.
bool acts_fixed_point_freely(const Group& G, const ChiefFactor& X,
                             const std::vector<Permutation>& elements);

}  // namespace oortlab
