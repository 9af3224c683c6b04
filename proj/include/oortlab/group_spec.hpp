#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "oortlab/constructors.hpp"

namespace oortlab {

/// Parsed construction request. Textual grammar:
///
///   C:m  D:2n  Q:2^k  SD:2^k  A:n  S:n  PSL2:q  PGL2:q  PSL3_4
///   INV:m:2^k:cyclic|klein  DELPERM:r:A4|S4[:sign]  PROD:(spec)x(spec)
///
/// Power-of-two arguments may be written either as a number (16) or as 2^4.
struct GroupSpec {
  struct Cyclic { std::uint32_t m; };
  struct Dihedral { std::uint32_t two_n; };
  struct Quaternion { std::uint32_t two_k; };
  struct Semidihedral { std::uint32_t two_k; };
  struct Alternating { std::uint32_t n; };
  struct Symmetric { std::uint32_t n; };
  struct Psl2 { std::uint32_t q; };
  struct Pgl2 { std::uint32_t q; };
  struct Psl34 {};
  struct Inversion { std::uint32_t m; std::uint32_t two_k; InversionKernel kernel; };
  struct DeletedPerm { std::uint32_t r; TopGroup top; bool sign_twist; };
  struct Product { std::shared_ptr<const GroupSpec> left, right; };

  std::variant<Cyclic, Dihedral, Quaternion, Semidihedral, Alternating, Symmetric, Psl2, Pgl2,
               Psl34, Inversion, DeletedPerm, Product>
      kind;
};

/// Throws ParseError.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text of a spec; parse_group_spec(to_string(s)) reproduces s.
std::string to_string(const GroupSpec& spec);

/// Builds the group; constructor range errors propagate.
Group build(const GroupSpec& spec);

inline Group build(std::string_view text) { return build(parse_group_spec(text)); }

}  // namespace oortlab
