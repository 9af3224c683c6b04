#include "oortlab/serialize.hpp"

#include "json_io.hpp"
#include "oortlab/analysis.hpp"

namespace oortlab {

namespace detail {

ordered_json witness_to_json(const Witness& w) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : w.generators) gens.push_back(g.cycle_string());
  return ordered_json{{"generators", gens}, {"order", w.order}, {"shape", w.shape.to_string()}};
}

ordered_json verdict_to_json(const std::string& spec, std::uint64_t order, const OortVerdict& v,
                             double timing_ms) {
  ordered_json ws = ordered_json::array();
  for (const auto& w : v.witnesses) ws.push_back(witness_to_json(w));
  ordered_json j;
  j["spec"] = spec;
  j["order"] = order;
  j["p"] = v.p;
  j["route"] = to_string(v.route);
  j["is_o_group"] = v.is_o_group;
  j["branch"] = v.branch;
  if (v.route == Route::Definition) j["examined"] = v.examined;
  j["witnesses"] = ws;
  j["timing_ms"] = timing_ms;
  return j;
}

ordered_json group_summary_to_json(const std::string& spec, const Group& G) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : G.generators()) gens.push_back(g.cycle_string());
  Predicates pr = predicates(G);
  ordered_json j;
  j["spec"] = spec;
  j["order"] = G.order();
  j["degree"] = G.degree();
  j["generators"] = gens;
  j["abelian"] = pr.abelian;
  j["solvable"] = pr.solvable;
  j["nilpotent"] = pr.nilpotent;
  j["perfect"] = pr.perfect;
  j["cyclic"] = is_cyclic(G);
  j["simple"] = is_simple(G);
  j["center_order"] = center(G).order();
  return j;
}

ordered_json identification_to_json(const Identification& id) {
  ordered_json j;
  j["relation"] = id.relation;
  j["name"] = id.name;
  j["order"] = id.order;
  if (!id.q.empty()) j["q"] = id.q;
  return j;
}

ordered_json report_to_json(const StructureReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["group_order"] = r.group_order;
  j["r_order"] = r.r_order;
  j["sylow_order"] = r.sylow_order;
  j["sylow_shape"] = r.sylow_shape;
  j["ncq"] = r.ncq;
  j["case"] = r.case_tag;
  j["quotient"] = r.quotient ? identification_to_json(*r.quotient) : ordered_json(nullptr);
  ordered_json factors = ordered_json::array();
  for (const auto& f : r.factors) {
    ordered_json fj;
    fj["order"] = f.order;
    fj["r"] = f.r;
    fj["d"] = f.d;
    fj["dimension"] = f.dimension;
    fj["klein_fixed_point_free"] = f.klein_fixed_point_free;
    fj["trace_order4"] = f.trace_order4 ? ordered_json(*f.trace_order4) : ordered_json(nullptr);
    factors.push_back(fj);
  }
  j["chief_factors"] = factors;
  ordered_json checks = ordered_json::array();
  for (const auto& [name, ok] : r.checks) checks.push_back({{"check", name}, {"holds", ok}});
  j["checks"] = checks;
  j["violations"] = r.violations;
  j["notes"] = r.notes;
  return j;
}

ordered_json claims_to_json(const std::vector<Claim>& claims) {
  ordered_json out = ordered_json::array();
  for (const auto& c : claims) {
    out.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return out;
}

std::string dump(const ordered_json& j, int indent) { return j.dump(indent); }

}  // namespace detail

std::string verdict_json(const std::string& spec, std::uint64_t order, const OortVerdict& v,
                         double timing_ms, int indent) {
  return detail::dump(detail::verdict_to_json(spec, order, v, timing_ms), indent);
}

std::string group_summary_json(const std::string& spec, const Group& G, int indent) {
  return detail::dump(detail::group_summary_to_json(spec, G), indent);
}

std::string report_json(const StructureReport& r, int indent) {
  return detail::dump(detail::report_to_json(r), indent);
}

std::string claims_json(const std::vector<Claim>& claims, int indent) {
  return detail::dump(detail::claims_to_json(claims), indent);
}

}  // namespace oortlab
