#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oortlab/group.hpp"
#include "oortlab/reports.hpp"
#include "oortlab/verdict.hpp"

namespace oortlab {

/// JSON renderings shared by the CLI and the Python module. `indent` < 0 gives one line.

/// {spec, order, p, route, is_o_group, branch, examined, witnesses, timing_ms}
std::string verdict_json(const std::string& spec, std::uint64_t order, const OortVerdict& v,
                         double timing_ms, int indent = 2);

/// {spec, order, degree, generators, abelian, solvable, nilpotent, perfect,
///  cyclic, simple, center_order}
std::string group_summary_json(const std::string& spec, const Group& G, int indent = 2);

std::string report_json(const StructureReport& r, int indent = 2);

std::string claims_json(const std::vector<Claim>& claims, int indent = 2);

}  // namespace oortlab
