#pragma once

// nlohmann::json builders. Internal to the library.

#include <string>
#include <vector>

#include "json.hpp"
#include "oortlab/group.hpp"
#include "oortlab/reports.hpp"
#include "oortlab/verdict.hpp"

namespace oortlab::detail {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json witness_to_json(const Witness& w);
ordered_json verdict_to_json(const std::string& spec, std::uint64_t order, const OortVerdict& v,
                             double timing_ms);
ordered_json group_summary_to_json(const std::string& spec, const Group& G);
ordered_json identification_to_json(const Identification& id);
ordered_json report_to_json(const StructureReport& r);
ordered_json claims_to_json(const std::vector<Claim>& claims);

std::string dump(const ordered_json& j, int indent);

}  // namespace oortlab::detail
