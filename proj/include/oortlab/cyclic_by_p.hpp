#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oortlab/group.hpp"

namespace oortlab {

struct CyclicByPResult {
  bool cyclic_by_p = false;
  std::optional<Group> op;          // O_p(H), when cyclic-by-p
  std::uint64_t quotient_order = 0;  // |H / O_p(H)|, when cyclic-by-p
};

/// True iff O_p(H) is a Sylow p-subgroup of H and H/O_p(H) is cyclic.
CyclicByPResult is_cyclic_by_p(const Group& H, std::uint64_t p);

/// One candidate from the enumeration: H = Q<t> with Q = O_p(H).
struct CyclicByPCandidate {
  const std::vector<std::uint32_t>& elements;  // sorted G.table() indices of H
  const std::vector<std::uint32_t>& q_generators;
  std::uint32_t t;                             // p'-element generating H modulo Q
  std::uint64_t q_order;
};

/// Calls `visit` once per distinct cyclic-by-p subgroup in a list that contains a
/// conjugate of every cyclic-by-p subgroup of G. Stops early when `visit` returns false.
/// Returns the number of candidates visited.
std::uint64_t visit_cyclic_by_p(const Group& G, std::uint64_t p,
                                const std::function<bool(const CyclicByPCandidate&)>& visit);

/// The same list as Groups.
std::vector<Group> cyclic_by_p_subgroups(const Group& G, std::uint64_t p);

/// All subgroups of a group small enough for a local multiplication table, as sorted
/// H.table() index sets. Throws TooLarge above 2048 elements.
std::vector<std::vector<std::uint32_t>> all_subgroups(const Group& H);

}  // namespace oortlab
