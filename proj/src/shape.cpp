#include "oortlab/shape.hpp"

#include <algorithm>
#include <numeric>

#include "oortlab/arith.hpp"
#include "table_ops.hpp"

namespace oortlab {

std::string ShapeVerdict::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "C" + std::to_string(order);
    case Kind::Dihedral: return "D" + std::to_string(order);
    case Kind::A4: return "A4";
    case Kind::Other: break;
  }
  return "Other(" + std::to_string(order) + ")";
}

ShapeVerdict shape_of_elements(const ElementTable& t, const std::vector<std::uint32_t>& members) {
  const std::uint64_t n = members.size();
  using K = ShapeVerdict::Kind;
  bool has_six = false;
  for (auto i : members) {
    if (t.order_of(i) == n) return {K::Cyclic, n};
    if (t.order_of(i) == 6) has_six = true;
  }
  if (n == 12 && !has_six) return {K::A4, n};
  if (n >= 4 && n % 2 == 0) {
    // In a dihedral group of order 2m every element of order m (m > 2) is a
    // rotation, and every element outside the rotations is an inverting involution.
    const std::uint64_t m = n / 2;
    auto c = std::find_if(members.begin(), members.end(),
                          [&](std::uint32_t i) { return t.order_of(i) == m; });
    if (c != members.end()) {
      auto rot = detail::powers(t, *c);
      std::sort(rot.begin(), rot.end());
      auto s = std::find_if(members.begin(), members.end(), [&](std::uint32_t i) {
        return !std::binary_search(rot.begin(), rot.end(), i);
      });
      if (s != members.end() && t.order_of(*s) == 2 &&
          t.multiply(t.multiply(*s, *c), *s) == t.inverse_of(*c)) {
        return {K::Dihedral, n};
      }
    }
  }
  return {K::Other, n};
}

ShapeVerdict shape_of(const Group& H) {
  const ElementTable& t = H.table();
  std::vector<std::uint32_t> all(t.size());
  std::iota(all.begin(), all.end(), 0u);
  return shape_of_elements(t, all);
}

bool allowed_shape(const ShapeVerdict& s, std::uint64_t p) {
  switch (s.kind) {
    case ShapeVerdict::Kind::Cyclic: return true;
    case ShapeVerdict::Kind::Dihedral: return p_part(s.order / 2, p) == s.order / 2;
    case ShapeVerdict::Kind::A4: return p == 2;
    case ShapeVerdict::Kind::Other: return false;
  }
  return false;
}

}  // namespace oortlab
