#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oortlab/group.hpp"

namespace oortlab {

/// Identification of a (quotient) group by order, simplicity and socle.
/// `relation` is "isomorphic-to", "consistent-with" or "unidentified".
struct Identification {
  std::string relation = "unidentified";
  std::string name;
  std::uint64_t order = 0;
  std::vector<std::uint64_t> q;  // every q with socle PSL(2,q), when that family matches
  bool pgl = false;              // index-2 extension matching PGL(2,q)
  bool psl3_4 = false;
};

Identification identify_almost_simple(const Group& Q);

struct FactorAudit {
  std::uint64_t order = 0;
  std::uint64_t r = 0;
  unsigned d = 0;
  /// "r^3", "NOT-VERIFIED", "fail" or "not-applicable"
  std::string dimension = "not-applicable";
  /// "pass", "fail" or "NOT-VERIFIED" (factor too large for coordinates)
  std::string klein_fixed_point_free = "NOT-VERIFIED";
  std::optional<long long> trace_order4;
};

struct StructureReport {
  std::uint64_t p = 0;
  std::uint64_t group_order = 0;
  std::uint64_t r_order = 0;  // R = O_{p'}(G), or O(G) when p = 2
  std::uint64_t sylow_order = 0;
  std::string sylow_shape;
  std::uint64_t ncq = 1;  // |N_G(P) / C_G(P)|
  std::string case_tag;
  std::optional<Identification> quotient;  // G/R
  std::vector<FactorAudit> factors;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> violations;  // THEOREM-VIOLATION details
  std::vector<std::string> notes;
};

/// Odd p. Throws PreconditionFailed unless the criterion route calls G an O-group.
StructureReport odd_structure_report(const Group& G, std::uint64_t p);

/// p = 2. Throws PreconditionFailed unless G is an O-group with dihedral Sylow 2-subgroup.
StructureReport even_structure_report(const Group& G);

enum class ClaimStatus { Pass, Fail, NotApplicable };

std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::NotApplicable;
  std::string detail;
};

/// Literal per-group evaluation of the structural claims; claims whose
/// hypotheses fail are reported not-applicable.
std::vector<Claim> theorem_audit(const Group& G, std::uint64_t p);

}  // namespace oortlab
