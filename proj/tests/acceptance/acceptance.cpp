// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oortlab/analysis.hpp"
#include "oortlab/arith.hpp"
#include "oortlab/commands.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/group_spec.hpp"
#include "oortlab/manifest.hpp"
#include "oortlab/quotient.hpp"
#include "oortlab/reports.hpp"
#include "oortlab/shape.hpp"
#include "oortlab/verdict.hpp"

using namespace oortlab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void fail(const std::string& what) {
    pass = false;
    if (failures.size() < 20) failures.push_back(what);
  }
};

void report(int n, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << name << "): " << o.summary << "\n";
  for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  std::cout.flush();
}

std::string key(const std::string& spec, std::uint64_t p) { return spec + " p=" + std::to_string(p); }

// 1: both routes agree on every (entry, p) of the bundled manifest.
Outcome oracle_equivalence(const CatalogueManifest& m, ValidationSummary& s) {
  Outcome o;
  auto t0 = Clock::now();
  s = validate_manifest(m, 1);
  const double secs = seconds_since(t0);
  std::size_t agree = 0;
  for (const auto& r : s.results) {
    if (!r.error.empty()) {
      o.fail(key(r.spec, r.p) + ": " + r.error);
    } else if (!r.agree()) {
      o.fail(key(r.spec, r.p) + ": definition=" + std::to_string(*r.definition) +
             " criterion=" + std::to_string(*r.criterion));
    } else {
      ++agree;
    }
    if (!r.witnesses_verified) o.fail(key(r.spec, r.p) + ": witness failed verification");
  }
  if (secs > 300) o.fail("single-threaded run took " + std::to_string(secs) + " s (budget 300 s)");
  std::ostringstream os;
  os << s.entries << " groups, " << s.results.size() << " (group, p) pairs, " << agree
     << " agreements, " << (s.results.size() - agree) << " disagreements, single-threaded "
     << std::fixed;
  os.precision(1);
  os << secs << " s";
  o.summary = os.str();
  return o;
}

// 2: the named verdict table, by the definitional route.
Outcome named_table() {
  struct Row {
    const char* spec;
    std::uint64_t p;
    bool expected;
  };
  const Row rows[] = {{"D:18", 3, true},          {"S:4", 2, true},           {"S:4", 3, true},
                      {"S:5", 5, false},          {"A:6", 3, false},          {"A:6", 5, true},
                      {"A:5", 2, true},           {"Q:8", 2, false},          {"SD:16", 2, false},
                      {"PSL2:7", 3, true},        {"PSL2:7", 7, false},       {"PGL2:5", 5, false},
                      {"PSL3_4", 5, true},        {"INV:3:8:klein", 2, false}, {"INV:3:8:cyclic", 2, true},
                      {"DELPERM:5:S4", 2, false}, {"DELPERM:5:S4:sign", 2, true}, {"DELPERM:5:A4", 2, true}};
  Outcome o;
  std::size_t matched = 0;
  for (const auto& row : rows) {
    Group g = build(row.spec);
    OortVerdict v = is_o_group_by_definition(g, row.p);
    bool ok = v.is_o_group == row.expected;
    for (const auto& w : v.witnesses) ok = ok && verify_witness(g, w, row.p);
    if (std::string(row.spec) == "S:5") {
      ok = ok && std::any_of(v.witnesses.begin(), v.witnesses.end(),
                             [](const Witness& w) { return w.order == 20; });
    }
    if (ok) {
      ++matched;
    } else {
      o.fail(key(row.spec, row.p) + ": got " + (v.is_o_group ? "T" : "F"));
    }
  }
  o.summary = std::to_string(matched) + "/" + std::to_string(std::size(rows)) + " rows match";
  return o;
}

// Every q giving the simple group PSL(2,q); PSL(2,4) and PSL(2,5) coincide.
std::vector<std::uint64_t> psl2_aliases(std::uint64_t q) {
  if (q == 4 || q == 5) return {4, 5};
  return {q};
}

// 3: verdicts of PSL2 / PGL2 / PSL3_4 entries against the divisibility conditions.
Outcome simple_odd_sweep(const CatalogueManifest& m) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : m.entries) {
    GroupSpec spec = parse_group_spec(e.spec);
    std::vector<std::uint64_t> qs;
    bool psl34 = false;
    if (auto* s = std::get_if<GroupSpec::Psl2>(&spec.kind)) {
      qs = psl2_aliases(s->q);
    } else if (auto* s = std::get_if<GroupSpec::Pgl2>(&spec.kind)) {
      qs = {s->q};
    } else if (std::holds_alternative<GroupSpec::Psl34>(spec.kind)) {
      psl34 = true;
    } else {
      continue;
    }
    Group g = build(spec);
    for (std::uint64_t p : prime_divisors(g.order())) {
      if (p == 2) continue;
      bool listed = psl34 && p == 5;
      for (auto q : qs) listed = listed || (q * q - 1) % p == 0;
      Group P = sylow(g, p);
      const bool n_eq_c = normalizer(g, P).order() == centralizer(g, P).order();
      const bool expected = listed || n_eq_c;
      const bool def = is_o_group_by_definition(g, p).is_o_group;
      const bool crit = is_o_group_by_criterion(g, p).is_o_group;
      ++checked;
      if (def != expected || crit != expected) {
        o.fail(key(e.spec, p) + ": expected " + (expected ? "T" : "F") + ", definition " + (def ? "T" : "F") +
               ", criterion " + (crit ? "T" : "F"));
      }
    }
  }
  o.summary = std::to_string(checked) + " (group, odd p | |G|) pairs checked";
  return o;
}

// 4: structural audits of every positive entry.
Outcome structural_audits(const ValidationSummary& s) {
  Outcome o;
  std::size_t odd = 0, even = 0, factors = 0;
  std::size_t claims = 0;
  for (const auto& r : s.results) {
    for (const auto& v : r.violations) o.fail(key(r.spec, r.p) + ": " + v);
    ++claims;
    if (!r.criterion || !*r.criterion) continue;
    Group g = build(r.spec);
    if (r.p != 2) {
      if (g.order() % r.p != 0) continue;
      StructureReport rep = odd_structure_report(g, r.p);
      ++odd;
      const bool triple = std::any_of(rep.checks.begin(), rep.checks.end(), [](const auto& c) {
        return c.first == "three-way equivalence" && c.second;
      });
      if (!triple) o.fail(key(r.spec, r.p) + ": three-way equivalence fails");
      if (rep.ncq != 1 && rep.case_tag != "G=RD" && rep.case_tag != "G/R almost simple") {
        o.fail(key(r.spec, r.p) + ": unclassified (" + rep.case_tag + ")");
      }
      continue;
    }
    Group P = sylow(g, 2);
    if (P.is_trivial() || shape_of(P).kind != ShapeVerdict::Kind::Dihedral) continue;
    StructureReport rep = even_structure_report(g);
    ++even;
    if (rep.case_tag == "unclassified") o.fail(key(r.spec, 2) + ": unclassified");
    const bool delperm = r.spec.rfind("DELPERM:", 0) == 0;
    for (const auto& f : rep.factors) {
      ++factors;
      if (delperm && (f.dimension != "r^3" || f.order != f.r * f.r * f.r)) {
        o.fail(key(r.spec, 2) + ": chief factor of order " + std::to_string(f.order) + " is not r^3");
      }
      if (rep.case_tag == "G=R:S4" && f.trace_order4 != 1) {
        o.fail(key(r.spec, 2) + ": trace of an order-4 element is not 1");
      }
    }
  }
  o.summary = std::to_string(odd) + " odd-p reports, " + std::to_string(even) + " p=2 reports, " +
              std::to_string(factors) + " chief factors audited, claims audited on " + std::to_string(claims) +
              " (group, p) pairs, " + std::to_string(o.failures.size()) + " violations";
  return o;
}

// Every p-element of g lies in a conjugate of P.
bool sylow_covers(const Group& g, const Group& P, std::uint64_t p) {
  const ElementTable& t = g.table();
  std::vector<char> covered(t.size(), 0);
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& x : t.elements()) {
    const Permutation xi = inverse(x);
    std::vector<std::uint32_t> conj;
    for (const auto& y : P.table().elements()) conj.push_back(t.index_of(compose(x, compose(y, xi))));
    std::sort(conj.begin(), conj.end());
    if (!seen.insert(conj).second) continue;
    for (auto i : conj) covered[i] = 1;
  }
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (p_part(t.order_of(i), p) == t.order_of(i) && !covered[i]) return false;
  }
  return true;
}

// 5: engine properties on catalogue groups of order <= 5000.
Outcome engine_properties(const CatalogueManifest& m) {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t groups = 0, checks = 0;
  for (const auto& e : m.entries) {
    Group g = build(e.spec);
    if (g.order() > 5000) continue;
    ++groups;
    std::uint64_t streamed = 0;
    for (const auto& x : g.elements()) {
      (void)x;
      ++streamed;
    }
    ++checks;
    if (streamed != g.order() || g.table().size() != g.order()) o.fail(e.spec + ": chain and enumeration disagree");
    for (std::uint64_t p : {2, 3, 5, 7}) {
      Group P = sylow(g, p);
      checks += 2;
      if (P.order() != p_part(g.order(), p) || !is_p_group(P, p)) o.fail(key(e.spec, p) + ": Sylow order");
      if (g.order() <= 2000 && !sylow_covers(g, P, p)) o.fail(key(e.spec, p) + ": Sylow conjugates miss a p-element");
      for (const std::vector<std::uint64_t>& pi : {std::vector<std::uint64_t>{p}, [&] {
             std::vector<std::uint64_t> rest;
             for (auto q : prime_divisors(g.order())) if (q != p) rest.push_back(q);
             return rest;
           }()}) {
        Group O = o_pi(g, pi);
        ++checks;
        bool ok = is_normal(g, O) && is_pi_number(O.order(), pi);
        for (const auto& mn : minimal_normal_subgroups(g)) {
          if (is_pi_number(mn.order(), pi)) ok = ok && is_subgroup(mn, O);
        }
        ok = ok && o_pi(quotient_by(g, O).group, pi).is_trivial();
        if (!ok) o.fail(key(e.spec, p) + ": O_pi characterization");
      }
    }
    for (const Group& n : {center(g), derived_subgroup(g), odd_core(g)}) {
      ++checks;
      if (quotient_by(g, n).group.order() * n.order() != g.order()) o.fail(e.spec + ": quotient order");
    }
  }
  const double secs = seconds_since(t0);
  if (secs > 60) o.fail("took " + std::to_string(secs) + " s (budget 60 s)");
  std::ostringstream os;
  os << groups << " groups, " << checks << " checks, " << std::fixed;
  os.precision(1);
  os << secs << " s";
  o.summary = os.str();
  return o;
}

// 6: G normal in H, sigma in H of order prime to |G| with C_G(sigma) abelian => G solvable.
Outcome coprime_fixed_points() {
  const char* overgroups[] = {"S:4",           "A:4",           "DELPERM:5:A4",   "DELPERM:5:S4",
                              "DELPERM:5:S4:sign", "DELPERM:7:A4", "DELPERM:7:S4", "DELPERM:7:S4:sign",
                              "INV:3:8:cyclic", "INV:3:8:klein", "INV:5:8:cyclic", "INV:5:8:klein",
                              "INV:9:8:cyclic", "INV:9:8:klein", "INV:15:8:cyclic", "INV:15:8:klein",
                              "D:30",          "PROD:(A:5)x(C:7)", "PROD:(S:3)x(C:5)", "PROD:(A:4)x(C:5)"};
  Outcome o;
  std::size_t instances = 0, nonabelian = 0, rejected = 0;
  for (const char* spec : overgroups) {
    Group h = build(spec);
    std::vector<Group> normals;
    auto add = [&](const Group& n) {
      if (n.is_trivial() || n.order() == h.order()) return;
      for (const auto& k : normals) {
        if (same_subgroup(k, n)) return;
      }
      normals.push_back(n);
    };
    for (const auto& n : derived_series(h)) add(n);
    for (std::uint64_t p : prime_divisors(h.order())) {
      add(o_p(h, p));
      add(o_p_prime(h, p));
    }
    for (const auto& n : minimal_normal_subgroups(h)) add(n);
    for (const auto& G : normals) {
      std::set<std::uint64_t> sigma_orders;
      for (const auto& cls : conjugacy_classes(h)) {
        const Permutation& sigma = h.table().at(cls.front());
        const std::uint64_t ord = element_order(sigma);
        if (ord == 1 || std::gcd(ord, G.order()) != 1 || !sigma_orders.insert(ord).second) continue;
        Group fixed = centralizer(G, std::vector<Permutation>{sigma});
        if (!is_abelian(fixed)) {
          ++rejected;
          continue;
        }
        ++instances;
        if (!is_abelian(G)) ++nonabelian;
        if (!is_solvable(G)) {
          o.fail(std::string(spec) + ": normal subgroup of order " + std::to_string(G.order()) +
                 " with abelian fixed points under an element of order " + std::to_string(ord) +
                 " is not solvable");
        }
      }
    }
  }
  if (instances < 20) o.fail("only " + std::to_string(instances) + " instances found (need 20)");
  o.summary = std::to_string(instances) + " instances (" + std::to_string(nonabelian) +
              " with nonabelian G), " + std::to_string(rejected) + " candidates with nonabelian fixed points skipped";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "data/catalogue.manifest";
  CatalogueManifest manifest;
  try {
    manifest = load_manifest(path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  bool all = true;
  auto run = [&](int n, const std::string& name, auto&& body) {
    Outcome o;
    try {
      o = body();
    } catch (const Error& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    report(n, name, o);
    all = all && o.pass;
  };
  ValidationSummary summary;
  run(1, "oracle equivalence", [&] { return oracle_equivalence(manifest, summary); });
  run(2, "named verdict table", [&] { return named_table(); });
  run(3, "almost-simple odd sweep", [&] { return simple_odd_sweep(manifest); });
  run(4, "structural audits", [&] { return structural_audits(summary); });
  run(5, "engine properties", [&] { return engine_properties(manifest); });
  run(6, "coprime action with abelian fixed points", [&] { return coprime_fixed_points(); });
  return all ? 0 : 1;
}
