#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oortlab/group.hpp"
#include "oortlab/shape.hpp"

namespace oortlab {

enum class Route { Definition, CriterionOdd, CriterionTwo };

std::string to_string(Route r);

/// A cyclic-by-p subgroup whose shape is not allowed.
struct Witness {
  std::vector<Permutation> generators;
  std::uint64_t order = 0;
  ShapeVerdict shape;
};

struct OortVerdict {
  bool is_o_group = true;
  Route route = Route::Definition;
  std::uint64_t p = 0;
  std::string branch;
  std::vector<Witness> witnesses;  // empty iff is_o_group
  std::uint64_t examined = 0;      // cyclic-by-p candidates scanned (definition route)
};

/// Scans a conjugacy-complete list of cyclic-by-p subgroups; a negative verdict
/// lists every distinct failing shape once. Throws CapExceeded, RangeError.
OortVerdict is_o_group_by_definition(const Group& G, std::uint64_t p);

/// Decides from the Sylow p-subgroup and its normalizer/centralizer data alone.
/// A negative verdict carries one witness found by a targeted search.
OortVerdict is_o_group_by_criterion(const Group& G, std::uint64_t p);

/// Witness validity: H is cyclic-by-p and its shape is not allowed.
bool verify_witness(const Group& G, const Witness& w, std::uint64_t p);

}  // namespace oortlab
