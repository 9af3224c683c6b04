#pragma once

#include <cstdint>
#include <functional>

#include "oortlab/group.hpp"

namespace oortlab {

/// C_m acting regularly on m points (m >= 1).
Group cyclic(std::uint32_t m);

/// D_{2n} of order `two_n`. D_2 is C_2 and D_4 is the Klein four group on 4 points;
/// for n >= 3 the natural action on the n vertices of a polygon.
Group dihedral(std::uint32_t two_n);

/// Generalized quaternion group of order two_k = 2^j >= 8 (regular representation).
Group quaternion(std::uint32_t two_k);

/// Semidihedral group of order two_k = 2^j >= 16 (regular representation).
Group semidihedral(std::uint32_t two_k);

Group alternating(std::uint32_t n);
Group symmetric(std::uint32_t n);

/// PSL(2,q) and PGL(2,q) on the q+1 points of the projective line, 4 <= q <= 64.
Group psl2(std::uint32_t q);
Group pgl2(std::uint32_t q);

/// PSL(3,4) on the 21 points of the projective plane over GF(4).
Group psl3_4();

enum class InversionKernel { Cyclic, Klein };

/// C_m x| D_{two_k}, where the index-2 subgroup selected by `kernel` centralizes C_m
/// and the remaining elements invert it: (a1,d1)(a2,d2) = (a1 + chi(d1) a2, d1 d2).
/// Kernel::Cyclic keeps the rotation subgroup, Kernel::Klein keeps <rho^2, s>.
/// Realized by the left regular representation. m odd >= 1, two_k = 2^j >= 8.
Group abelian_by_dihedral_inversion(std::uint32_t m, std::uint32_t two_k, InversionKernel kernel);

enum class TopGroup { A4, S4 };

/// (C_r)^3 x| top acting affinely on the zero-sum vectors of GF(r)^4.
/// With sign_twist (S4 only) odd permutations act as the negated coordinate permutation.
/// r in {5, 7, 11, 13}.
Group deleted_perm_semidirect(std::uint32_t r, TopGroup top, bool sign_twist);

/// G1 x G2 acting on the disjoint union of the two point sets.
Group direct_product(const Group& a, const Group& b);

/// Left regular representation of a group on {0..n-1} with multiplication `mul`
/// and identity 0, generated by the listed element codes.
Group regular_representation(std::uint32_t n,
                             const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                             const std::vector<std::uint32_t>& generators);

}  // namespace oortlab
