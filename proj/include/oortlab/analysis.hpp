#pragma once

#include <cstdint>
#include <vector>

#include "oortlab/group.hpp"

namespace oortlab {

// Subgroups are returned in the ambient degree. Functions that filter the
// element store throw CapExceeded when the ambient group is too large.

/// C_G(S): elements of G commuting with every generator of S.
Group centralizer(const Group& G, const Group& S);
Group centralizer(const Group& G, const std::vector<Permutation>& elements);

/// N_G(H). Throws NonSubgroup unless H <= G.
Group normalizer(const Group& G, const Group& H);

Group center(const Group& G);

/// A Sylow p-subgroup, grown from the cyclic group of a p-element of largest
/// order by adjoining p-elements of its normalizer. Throws RangeError if p is not prime.
Group sylow(const Group& G, std::uint64_t p);

/// Subgroup generated by the elements of order p. Throws NotPGroup.
Group omega1(const Group& P, std::uint64_t p);

/// Smallest normal subgroup of G containing `elements` (chain based, no enumeration).
Group normal_closure(const Group& G, const std::vector<Permutation>& elements);

/// Largest normal pi-subgroup.
Group o_pi(const Group& G, const std::vector<std::uint64_t>& primes);
Group o_p(const Group& G, std::uint64_t p);
/// O_{p'}(G).
Group o_p_prime(const Group& G, std::uint64_t p);
/// O(G) = O_{2'}(G).
Group odd_core(const Group& G);

Group derived_subgroup(const Group& G);
/// G = G0 > G1 > ... down to the first repeated term.
std::vector<Group> derived_series(const Group& G);
std::vector<Group> lower_central_series(const Group& G);

struct Predicates {
  bool abelian = false;
  bool solvable = false;
  bool nilpotent = false;
  bool perfect = false;
};

Predicates predicates(const Group& G);
bool is_abelian(const Group& G);
bool is_solvable(const Group& G);
bool is_nilpotent(const Group& G);
bool is_perfect(const Group& G);
bool is_cyclic(const Group& G);
bool is_p_group(const Group& G, std::uint64_t p);
/// Nontrivial with no proper nontrivial normal subgroup.
bool is_simple(const Group& G);

/// Conjugacy classes as sorted G.table() indices, ordered by least member.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const Group& G);

/// Inclusion-minimal normal closures of single nontrivial elements.
std::vector<Group> minimal_normal_subgroups(const Group& G);

/// Elementary abelian subgroups of order 4, ordered by their element indices in H.
std::vector<Group> klein_four_subgroups(const Group& H);

}  // namespace oortlab
