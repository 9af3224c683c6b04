#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oortlab/group.hpp"

namespace oortlab {

/// Cyclic(m) | Dihedral(2m) | A4 | Other, with the group order.
/// C2 is Cyclic(2); the Klein four group is Dihedral(4).
struct ShapeVerdict {
  enum class Kind { Cyclic, Dihedral, A4, Other };
  Kind kind = Kind::Other;
  std::uint64_t order = 1;

  /// "C12", "D8", "A4", "Other(20)"
  std::string to_string() const;
  friend bool operator==(const ShapeVerdict&, const ShapeVerdict&) = default;
};

/// Throws CapExceeded.
ShapeVerdict shape_of(const Group& H);

/// Shape of the subgroup whose element set is `members` (indices into t).
ShapeVerdict shape_of_elements(const ElementTable& t, const std::vector<std::uint32_t>& members);

/// C_m, D_{2p^n}, or A4 when p = 2.
bool allowed_shape(const ShapeVerdict& s, std::uint64_t p);

}  // namespace oortlab
