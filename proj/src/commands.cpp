#include "oortlab/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json_io.hpp"
#include "oortlab/analysis.hpp"
#include "oortlab/arith.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/group_spec.hpp"
#include "oortlab/reports.hpp"
#include "oortlab/shape.hpp"
#include "oortlab/verdict.hpp"

namespace oortlab {

using detail::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

CommandOutput failure(int code, const std::string& what) {
  CommandOutput o;
  o.exit_code = code;
  o.err = "error: " + what + "\n";
  return o;
}

// Maps library errors to exit codes around a command body.
template <class F>
CommandOutput guarded(F&& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    return failure(exit_code::kCapExceeded, e.what());
  } catch (const TooLarge& e) {
    return failure(exit_code::kCapExceeded, e.what());
  } catch (const Error& e) {
    return failure(exit_code::kInputError, e.what());
  }
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not a prime");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void render_verdict(std::ostream& os, const OortVerdict& v) {
  os << "  " << std::left << std::setw(14) << to_string(v.route)
     << (v.is_o_group ? "O-group" : "not an O-group") << "  [" << v.branch << "]\n";
  for (const auto& w : v.witnesses) {
    os << "    witness " << w.shape.to_string() << " of order " << w.order << ":";
    for (const auto& g : w.generators) os << " " << g.cycle_string();
    os << "\n";
  }
}

std::optional<StructureReport> structure_report(const Group& G, std::uint64_t p,
                                                const OortVerdict& crit, std::string* skipped) {
  if (!crit.is_o_group) {
    *skipped = "not an O-group";
    return std::nullopt;
  }
  if (p != 2) return odd_structure_report(G, p);
  Group P = sylow(G, 2);
  if (P.is_trivial() || shape_of(P).kind != ShapeVerdict::Kind::Dihedral) {
    *skipped = "Sylow 2-subgroup is not dihedral";
    return std::nullopt;
  }
  return even_structure_report(G);
}

// Report violations plus failed claims.
std::vector<std::string> collect_violations(const std::optional<StructureReport>& report,
                                            const std::vector<Claim>& claims) {
  std::vector<std::string> out;
  if (report) out = report->violations;
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::Fail) out.push_back("claim " + c.id + " failed: " + c.detail);
  }
  return out;
}

EntryResult run_entry(const Group& G, const std::string& spec, std::size_t line, std::uint64_t p,
                      std::optional<bool> expected) {
  EntryResult r;
  r.spec = spec;
  r.line = line;
  r.p = p;
  r.expected = expected;
  auto t0 = Clock::now();
  ordered_json j;
  j["spec"] = spec;
  j["line"] = line;
  j["p"] = p;
  try {
    r.order = G.order();
    j["order"] = r.order;
    auto td = Clock::now();
    OortVerdict def = is_o_group_by_definition(G, p);
    double def_ms = ms_since(td);
    auto tc = Clock::now();
    OortVerdict crit = is_o_group_by_criterion(G, p);
    double crit_ms = ms_since(tc);
    r.definition = def.is_o_group;
    r.criterion = crit.is_o_group;
    for (const auto* v : {&def, &crit}) {
      for (const auto& w : v->witnesses) {
        if (!verify_witness(G, w, p)) r.witnesses_verified = false;
      }
    }
    if (!def.is_o_group && def.witnesses.empty()) r.witnesses_verified = false;
    j["definition"] = detail::verdict_to_json(spec, r.order, def, def_ms);
    j["criterion"] = detail::verdict_to_json(spec, r.order, crit, crit_ms);
    std::string skipped;
    auto report = structure_report(G, p, crit, &skipped);
    r.violations = collect_violations(report, theorem_audit(G, p));
    j["case"] = report ? ordered_json(report->case_tag) : ordered_json(nullptr);
  } catch (const Error& e) {
    r.error = e.what();
  }
  r.timing_ms = ms_since(t0);
  j["agree"] = r.agree();
  j["expected"] = expected ? ordered_json(*expected) : ordered_json(nullptr);
  j["expect_match"] = r.expect_ok();
  j["witnesses_verified"] = r.witnesses_verified;
  j["violations"] = r.violations;
  j["error"] = r.error.empty() ? ordered_json(nullptr) : ordered_json(r.error);
  j["timing_ms"] = r.timing_ms;
  r.json_line = j.dump();
  return r;
}

std::vector<EntryResult> run_manifest_entry(const ManifestEntry& e) {
  std::vector<EntryResult> out;
  std::optional<Group> G;
  std::string build_error;
  try {
    G = build(e.spec);
  } catch (const Error& err) {
    build_error = err.what();
  }
  for (std::size_t i = 0; i < e.primes.size(); ++i) {
    std::optional<bool> expected;
    if (e.expect) expected = (*e.expect)[i];
    if (G) {
      out.push_back(run_entry(*G, e.spec, e.line, e.primes[i], expected));
    } else {
      EntryResult r;
      r.spec = e.spec;
      r.line = e.line;
      r.p = e.primes[i];
      r.expected = expected;
      r.error = build_error;
      r.json_line = ordered_json{{"spec", e.spec}, {"line", e.line}, {"p", r.p}, {"error", r.error}}.dump();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

RouteChoice parse_route(const std::string& text) {
  if (text == "def") return RouteChoice::Definition;
  if (text == "crit") return RouteChoice::Criterion;
  if (text == "both") return RouteChoice::Both;
  throw ParseError("route must be def, crit or both, got '" + text + "'");
}

CommandOutput cmd_construct(const std::string& spec, bool table) {
  return guarded([&] {
    GroupSpec parsed = parse_group_spec(spec);
    Group G = build(parsed);
    ordered_json j = detail::group_summary_to_json(spec, G);
    j["canonical"] = to_string(parsed);
    CommandOutput o;
    if (!table) {
      o.out = j.dump(2) + "\n";
      return o;
    }
    std::ostringstream os;
    os << spec << " (" << to_string(parsed) << ")\n"
       << "  order " << G.order() << ", degree " << G.degree() << ", " << G.generators().size()
       << " generators\n"
       << "  abelian " << yes_no(j["abelian"].get<bool>()) << ", solvable " << yes_no(j["solvable"].get<bool>())
       << ", nilpotent " << yes_no(j["nilpotent"].get<bool>()) << ", perfect " << yes_no(j["perfect"].get<bool>())
       << ", cyclic " << yes_no(j["cyclic"].get<bool>()) << ", simple " << yes_no(j["simple"].get<bool>()) << "\n"
       << "  |Z(G)| = " << j["center_order"].get<std::uint64_t>() << "\n";
    o.out = os.str();
    return o;
  });
}

CommandOutput cmd_check(const std::string& spec, std::uint64_t p, RouteChoice route, bool table) {
  return guarded([&] {
    require_prime(p);
    Group G = build(spec);
    std::vector<std::pair<OortVerdict, double>> runs;
    if (route != RouteChoice::Criterion) {
      auto t0 = Clock::now();
      OortVerdict v = is_o_group_by_definition(G, p);
      runs.emplace_back(std::move(v), ms_since(t0));
    }
    if (route != RouteChoice::Definition) {
      auto t0 = Clock::now();
      OortVerdict v = is_o_group_by_criterion(G, p);
      runs.emplace_back(std::move(v), ms_since(t0));
    }
    const bool verdict = runs.front().first.is_o_group;
    const bool agree = std::all_of(runs.begin(), runs.end(),
                                   [&](const auto& r) { return r.first.is_o_group == verdict; });
    CommandOutput o;
    o.exit_code = !agree ? exit_code::kRouteDisagreement
                         : (verdict ? exit_code::kOk : exit_code::kNotOGroup);
    if (table) {
      std::ostringstream os;
      os << spec << " (order " << G.order() << ") p=" << p << "\n";
      for (const auto& [v, ms] : runs) render_verdict(os, v);
      if (runs.size() == 2) os << "  routes " << (agree ? "agree" : "DISAGREE") << "\n";
      o.out = os.str();
      return o;
    }
    ordered_json j;
    if (runs.size() == 1) {
      j = detail::verdict_to_json(spec, G.order(), runs[0].first, runs[0].second);
    } else {
      j["spec"] = spec;
      j["order"] = G.order();
      j["p"] = p;
      j["route"] = "both";
      j["routes_agree"] = agree;
      j["is_o_group"] = verdict;
      j["definition"] = detail::verdict_to_json(spec, G.order(), runs[0].first, runs[0].second);
      j["criterion"] = detail::verdict_to_json(spec, G.order(), runs[1].first, runs[1].second);
    }
    o.out = j.dump(2) + "\n";
    return o;
  });
}

CommandOutput cmd_audit(const std::string& spec, std::uint64_t p, bool table) {
  return guarded([&] {
    require_prime(p);
    Group G = build(spec);
    OortVerdict crit = is_o_group_by_criterion(G, p);
    std::string skipped;
    auto report = structure_report(G, p, crit, &skipped);
    auto claims = theorem_audit(G, p);
    auto violations = collect_violations(report, claims);
    CommandOutput o;
    o.exit_code = violations.empty() ? exit_code::kOk : exit_code::kTheoremViolation;
    if (table) {
      std::ostringstream os;
      os << spec << " (order " << G.order() << ") p=" << p << ": "
         << (crit.is_o_group ? "O-group" : "not an O-group") << "\n";
      if (report) {
        os << "  case " << report->case_tag << "; |R|=" << report->r_order << ", P=" << report->sylow_shape
           << ", |N/C|=" << report->ncq << "\n";
        if (report->quotient) {
          os << "  G/R " << report->quotient->relation << " " << report->quotient->name << "\n";
        }
        for (const auto& [name, ok] : report->checks) os << "  check " << name << ": " << yes_no(ok) << "\n";
        for (const auto& f : report->factors) {
          os << "  chief factor " << f.order << ": dimension " << f.dimension << ", Klein fixed-point-free "
             << f.klein_fixed_point_free;
          if (f.trace_order4) os << ", trace " << *f.trace_order4;
          os << "\n";
        }
        for (const auto& n : report->notes) os << "  note " << n << "\n";
      } else {
        os << "  no structure report: " << skipped << "\n";
      }
      for (const auto& c : claims) os << "  claim " << c.id << ": " << to_string(c.status) << "\n";
      for (const auto& v : violations) os << "  THEOREM-VIOLATION " << v << "\n";
      o.out = os.str();
      return o;
    }
    ordered_json j;
    j["spec"] = spec;
    j["order"] = G.order();
    j["p"] = p;
    j["is_o_group"] = crit.is_o_group;
    j["branch"] = crit.branch;
    j["report"] = report ? detail::report_to_json(*report) : ordered_json(nullptr);
    if (!report) j["report_skipped"] = skipped;
    j["claims"] = detail::claims_to_json(claims);
    j["theorem_violations"] = violations;
    o.out = j.dump(2) + "\n";
    return o;
  });
}

bool ValidationSummary::ok() const {
  return std::all_of(results.begin(), results.end(), [](const EntryResult& r) { return r.ok(); });
}

ValidationSummary validate_manifest(const CatalogueManifest& manifest, unsigned jobs) {
  auto t0 = Clock::now();
  const std::size_t n = manifest.entries.size();
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::vector<EntryResult>> per_entry(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) per_entry[i] = run_manifest_entry(manifest.entries[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::min<std::size_t>(jobs, n); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ValidationSummary s;
  s.entries = n;
  for (auto& rs : per_entry) {
    for (auto& r : rs) s.results.push_back(std::move(r));
  }
  s.elapsed_ms = ms_since(t0);
  return s;
}

CommandOutput cmd_validate(const std::string& manifest_path, const ValidateOptions& options) {
  CatalogueManifest manifest;
  try {
    manifest = load_manifest(manifest_path);
  } catch (const Error& e) {
    return failure(exit_code::kInputError, e.what());
  }
  std::ofstream out_file;
  if (options.out) {
    out_file.open(*options.out);
    if (!out_file) return failure(exit_code::kInputError, "cannot write " + *options.out);
  }
  ValidationSummary s = validate_manifest(manifest, options.jobs);
  if (options.out) {
    for (const auto& r : s.results) out_file << r.json_line << "\n";
    out_file.flush();
    if (!out_file) return failure(exit_code::kInputError, "error writing " + *options.out);
  }

  ordered_json disagreements = ordered_json::array(), mismatches = ordered_json::array(),
               witness_failures = ordered_json::array(), violations = ordered_json::array(),
               errors = ordered_json::array();
  std::size_t agreements = 0;
  for (const auto& r : s.results) {
    ordered_json key = {{"spec", r.spec}, {"p", r.p}};
    if (!r.error.empty()) {
      errors.push_back({{"spec", r.spec}, {"p", r.p}, {"error", r.error}});
      continue;
    }
    if (r.agree()) {
      ++agreements;
    } else {
      disagreements.push_back(
          {{"spec", r.spec}, {"p", r.p}, {"definition", *r.definition}, {"criterion", *r.criterion}});
    }
    if (!r.expect_ok()) {
      mismatches.push_back({{"spec", r.spec}, {"p", r.p}, {"expected", *r.expected}, {"definition", *r.definition}});
    }
    if (!r.witnesses_verified) witness_failures.push_back(key);
    for (const auto& v : r.violations) violations.push_back({{"spec", r.spec}, {"p", r.p}, {"detail", v}});
  }

  CommandOutput o;
  o.exit_code = s.ok() ? exit_code::kOk : exit_code::kDisagreement;
  if (options.table) {
    std::ostringstream os;
    for (const auto& r : s.results) {
      os << std::left << std::setw(28) << r.spec << " p=" << std::setw(3) << r.p;
      if (!r.error.empty()) {
        os << "ERROR " << r.error << "\n";
        continue;
      }
      os << " def=" << (*r.definition ? 'T' : 'F') << " crit=" << (*r.criterion ? 'T' : 'F');
      if (r.expected) os << " expect=" << (*r.expected ? 'T' : 'F');
      os << (r.ok() ? "  ok" : "  FAIL") << "  " << std::fixed << std::setprecision(1) << r.timing_ms
         << " ms\n";
    }
    os << s.entries << " entries, " << s.results.size() << " checks, " << disagreements.size()
       << " disagreements, " << mismatches.size() << " expect mismatches, " << witness_failures.size()
       << " witness failures, " << violations.size() << " violations, " << errors.size() << " errors, "
       << std::fixed << std::setprecision(0) << s.elapsed_ms << " ms\n";
    o.out = os.str();
    return o;
  }
  ordered_json j;
  j["manifest"] = manifest_path;
  j["entries"] = s.entries;
  j["checks"] = s.results.size();
  j["agreements"] = agreements;
  j["disagreements"] = disagreements;
  j["expect_mismatches"] = mismatches;
  j["witness_failures"] = witness_failures;
  j["violations"] = violations;
  j["errors"] = errors;
  j["jobs"] = options.jobs;
  j["elapsed_ms"] = s.elapsed_ms;
  o.out = j.dump(2) + "\n";
  return o;
}

}  // namespace oortlab
