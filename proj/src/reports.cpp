#include "oortlab/reports.hpp"

#include <algorithm>

#include "oortlab/analysis.hpp"
#include "oortlab/arith.hpp"
#include "oortlab/chief.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/quotient.hpp"
#include "oortlab/shape.hpp"
#include "oortlab/verdict.hpp"

namespace oortlab {

namespace {

// A8 shares this order; order alone cannot separate them.
constexpr std::uint64_t kPsl34Order = 20160;

std::uint64_t psl2_order(std::uint64_t q) { return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1); }

std::vector<std::uint64_t> psl2_candidates(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 4; q * (q * q - 1) / 2 <= n; ++q) {
    if (prime_power(q) && psl2_order(q) == n) out.push_back(q);
  }
  return out;
}

std::optional<unsigned> alternating_degree(std::uint64_t n) {
  std::uint64_t f = 60;
  for (unsigned k = 5; f <= n; ++k, f *= k) {
    if (f == n) return k;
  }
  return std::nullopt;
}

Identification identify_simple(const Group& S) {
  Identification id;
  id.order = S.order();
  const std::uint64_t n = id.order;
  id.relation = "consistent-with";
  if (n == kPsl34Order) {
    id.name = "PSL(3,4)";
    id.psl3_4 = true;
    return id;
  }
  id.q = psl2_candidates(n);
  if (!id.q.empty()) {
    id.name = "PSL(2," + std::to_string(id.q.back()) + ")";
    return id;
  }
  if (auto k = alternating_degree(n)) {
    id.name = "A" + std::to_string(*k);
    return id;
  }
  id.relation = "unidentified";
  id.name = "simple group of order " + std::to_string(n);
  return id;
}

Group quotient_group(const Group& G, const Group& R) {
  if (R.is_trivial()) return G;
  return quotient_by(G, R).group;
}

// Nontrivial subgroups of a cyclic p-group P, largest first.
std::vector<Group> cyclic_chain(const Group& P, std::uint64_t p) {
  const ElementTable& t = P.table();
  std::uint32_t gen = 0;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (t.order_of(i) == P.order()) gen = i;
  }
  std::vector<Group> out;
  for (std::uint64_t k = 1; k < P.order(); k *= p) {
    out.push_back(Group(P.degree(), {power(t.at(gen), static_cast<long long>(k))}));
  }
  return out;
}

bool inverts(const Permutation& x, const Group& A) {
  return std::all_of(A.generators().begin(), A.generators().end(),
                     [&](const Permutation& a) { return compose(compose(x, a), x) == inverse(a); });
}

// Every element of N outside C is an involution inverting C.
bool outside_inverts(const Group& N, const Group& C) {
  for (const auto& x : N.table().elements()) {
    if (C.contains(x)) continue;
    if (element_order(x) != 2 || !inverts(x, C)) return false;
  }
  return true;
}

bool a4_embeds(const Group& G, const std::vector<Group>& kleins) {
  for (const auto& K : kleins) {
    Group C = centralizer(G, K);
    Group N = normalizer(G, K);
    for (const auto& x : N.table().elements()) {
      if (element_order(x) == 3 && !C.contains(x)) return true;
    }
  }
  return false;
}

bool has_element_order(const Group& G, std::uint64_t n) {
  const ElementTable& t = G.table();
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (t.order_of(i) == n) return true;
  }
  return false;
}

bool is_s4(const Group& Q) {
  if (Q.order() != 24 || !center(Q).is_trivial()) return false;
  Group D = derived_subgroup(Q);
  return D.order() == 12 && shape_of(D).kind == ShapeVerdict::Kind::A4;
}

void check(StructureReport& rep, const std::string& name, bool ok) {
  rep.checks.emplace_back(name, ok);
  if (!ok) rep.violations.push_back(name);
}

}  // namespace

Identification identify_almost_simple(const Group& Q) {
  if (!is_abelian(Q) && is_simple(Q)) return identify_simple(Q);
  Identification id;
  id.order = Q.order();
  auto mins = minimal_normal_subgroups(Q);
  if (mins.size() != 1 || is_abelian(mins[0]) || !is_simple(mins[0]) ||
      !centralizer(Q, mins[0]).is_trivial()) {
    id.name = "order " + std::to_string(id.order);
    return id;
  }
  Identification socle = identify_simple(mins[0]);
  const std::uint64_t index = Q.order() / mins[0].order();
  id.relation = socle.relation == "unidentified" ? "unidentified" : "consistent-with";
  id.q = socle.q;
  id.psl3_4 = socle.psl3_4;
  const std::uint64_t q = socle.q.empty() ? 0 : socle.q.back();
  if (q % 2 == 1 && index == 2 && has_element_order(Q, q - 1) && has_element_order(Q, q + 1)) {
    id.pgl = true;
    id.q = {q};
    id.name = "PGL(2," + std::to_string(q) + ")";
  } else {
    id.name = socle.name + " extended by index " + std::to_string(index);
  }
  return id;
}

StructureReport odd_structure_report(const Group& G, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw RangeError("odd_structure_report needs an odd prime");
  if (!is_o_group_by_criterion(G, p).is_o_group) {
    throw PreconditionFailed("group is not an O-group for p=" + std::to_string(p));
  }
  StructureReport rep;
  rep.p = p;
  rep.group_order = G.order();
  Group R = o_p_prime(G, p);
  Group P = sylow(G, p);
  rep.r_order = R.order();
  rep.sylow_order = P.order();
  rep.sylow_shape = shape_of(P).to_string();
  if (P.is_trivial()) {
    rep.case_tag = "p does not divide |G|";
    check(rep, "G=R", R.order() == G.order());
    return rep;
  }
  rep.ncq = normalizer(G, P).order() / centralizer(G, P).order();

  const bool rp = R.order() * P.order() == G.order();
  const bool nc = rep.ncq == 1;
  bool nc_all = true;
  for (const auto& Q : cyclic_chain(P, p)) {
    if (normalizer(G, Q).order() != centralizer(G, Q).order()) nc_all = false;
  }
  rep.checks.emplace_back("G=RP", rp);
  rep.checks.emplace_back("N_G(P)=C_G(P)", nc);
  rep.checks.emplace_back("N_G(Q)=C_G(Q) for every nontrivial Q<=P", nc_all);
  check(rep, "three-way equivalence", rp == nc && nc == nc_all);
  if (nc) {
    rep.case_tag = "G=RP";
    return rep;
  }

  check(rep, "|N_G(P)/C_G(P)|=2", rep.ncq == 2);
  check(rep, "R solvable", is_solvable(R));
  Group Qg = quotient_group(G, R);
  ShapeVerdict s = shape_of(Qg);
  if (s.kind == ShapeVerdict::Kind::Dihedral && p_part(s.order / 2, p) == s.order / 2) {
    rep.case_tag = "G=RD";
    Identification id;
    id.relation = "isomorphic-to";
    id.name = s.to_string();
    id.order = s.order;
    rep.quotient = id;
    return rep;
  }
  Identification id = identify_almost_simple(Qg);
  rep.quotient = id;
  if (id.relation == "unidentified") {
    rep.case_tag = "unclassified";
    check(rep, "G/R dihedral or almost simple in the list", false);
    return rep;
  }
  rep.case_tag = "G/R almost simple";
  bool listed = false;
  const bool psl_or_pgl = id.pgl || (!id.q.empty() && id.name.rfind("PSL(2,", 0) == 0);
  if (psl_or_pgl) {
    for (auto q : id.q) {
      if ((q * q - 1) % p == 0) {
        listed = true;
        rep.notes.push_back("PSL(2,q)/PGL(2,q) with q=" + std::to_string(q) + " and p | q^2-1");
      }
    }
  }
  if (id.psl3_4 && p == 5) {
    listed = true;
    rep.notes.push_back("socle of order 20160 with p=5");
  }
  check(rep, "G/R in the almost-simple list", listed);
  return rep;
}

StructureReport even_structure_report(const Group& G) {
  OortVerdict v = is_o_group_by_criterion(G, 2);
  Group P = sylow(G, 2);
  if (!v.is_o_group || P.is_trivial() || shape_of(P).kind != ShapeVerdict::Kind::Dihedral) {
    throw PreconditionFailed("needs an O-group for p=2 with dihedral Sylow 2-subgroup");
  }
  StructureReport rep;
  rep.p = 2;
  rep.group_order = G.order();
  Group R = odd_core(G);
  rep.r_order = R.order();
  rep.sylow_order = P.order();
  rep.sylow_shape = shape_of(P).to_string();
  rep.ncq = normalizer(G, P).order() / centralizer(G, P).order();

  check(rep, "[R,R] nilpotent", is_nilpotent(derived_subgroup(R)));
  auto kleins = klein_four_subgroups(P);
  bool fpf = std::all_of(kleins.begin(), kleins.end(),
                         [&](const Group& K) { return centralizer(R, K).is_trivial(); });
  check(rep, "C_R(K)=1 for every Klein four K<=P", fpf);
  const bool a4 = a4_embeds(G, kleins);
  rep.checks.emplace_back("A4 embeds", a4);

  Group Qg = quotient_group(G, R);
  std::optional<std::uint64_t> module_r;
  if (!a4) {
    rep.case_tag = "G=RP";
    check(rep, "G=RP without A4", R.order() * P.order() == G.order());
  } else if (Qg.order() == 12 && shape_of(Qg).kind == ShapeVerdict::Kind::A4) {
    rep.case_tag = "G=R:A4";
    rep.quotient = Identification{"isomorphic-to", "A4", 12, {}, false, false};
  } else if (is_s4(Qg)) {
    rep.case_tag = "G=R:S4";
    rep.quotient = Identification{"isomorphic-to", "S4", 24, {}, false, false};
  } else if (!is_solvable(G)) {
    rep.case_tag = "G/R=PSL(2,q) or PGL(2,q)";
    Identification id = identify_almost_simple(Qg);
    rep.quotient = id;
    std::optional<std::uint64_t> q;
    for (auto c : id.q) {
      if (c % 2 == 1 && c > 4) q = c;
    }
    const bool psl_or_pgl = id.pgl || id.name.rfind("PSL(2,", 0) == 0;
    check(rep, "G/R is PSL(2,q) or PGL(2,q) with q>4 odd", q.has_value() && psl_or_pgl);
    check(rep, "R nilpotent", is_nilpotent(R));
    if (q) {
      module_r = prime_power(*q)->first;
      const bool r_group = p_part(R.order(), *module_r) == R.order();
      if (*q > 7 || id.pgl) {
        check(rep, "R is an r-group for q=" + std::to_string(*q), r_group);
      } else {
        rep.notes.push_back(std::string("r-group claim not asserted for q=") + std::to_string(*q) +
                            " with PSL quotient; R is " + (r_group ? "" : "not ") + "an r-group");
      }
    }
  } else {
    rep.case_tag = "unclassified";
    check(rep, "case classification", false);
  }

  if (R.is_trivial()) return rep;
  const bool module_case = rep.case_tag != "G=RP";
  std::optional<Permutation> x4;
  for (const auto& x : P.table().elements()) {
    if (element_order(x) == 4) {
      x4 = x;
      break;
    }
  }
  for (const auto& X : chief_series_within(G, R)) {
    FactorAudit fa;
    fa.order = X.order();
    fa.r = X.r;
    fa.d = X.d;
    if (module_case) {
      if (X.abelian && X.d == 3) {
        fa.dimension = "r^3";
      } else if (X.abelian && X.d % 3 == 0 && rep.case_tag.rfind("G/R=", 0) == 0) {
        fa.dimension = "NOT-VERIFIED";
      } else {
        fa.dimension = "fail";
        rep.violations.push_back("chief factor of order " + std::to_string(fa.order) +
                                 " is not of order r^3");
      }
    }
    if (X.abelian && X.coordinates) {
      bool free = std::all_of(kleins.begin(), kleins.end(), [&](const Group& K) {
        return acts_fixed_point_freely(G, X, K.generators());
      });
      fa.klein_fixed_point_free = free ? "pass" : "fail";
      if (!free) rep.violations.push_back("Klein four fixes a nonzero vector of a chief factor");
      if (rep.case_tag == "G=R:S4" && x4) {
        fa.trace_order4 = factor_action(G, X, *x4).trace;
        if (*fa.trace_order4 != 1) {
          rep.violations.push_back("order-4 element has trace " +
                                   std::to_string(*fa.trace_order4) + " on a chief factor");
        }
      }
    }
    rep.factors.push_back(fa);
  }
  return rep;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

std::vector<Claim> theorem_audit(const Group& G, std::uint64_t p) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not a prime");
  using S = ClaimStatus;
  auto verdict = [](bool ok) { return ok ? S::Pass : S::Fail; };
  std::vector<Claim> out;
  const bool odd = p != 2;
  const bool divides = G.order() % p == 0;
  const bool o_group = is_o_group_by_criterion(G, p).is_o_group;
  Group P = sylow(G, p);
  const bool p_cyclic = is_cyclic(P);
  std::optional<Group> N, C;
  if (divides) {
    N = normalizer(G, P);
    C = centralizer(G, P);
  }
  const bool n_eq_c = !divides || N->order() == C->order();
  Group R = o_p_prime(G, p);

  // Odd p: Sylow cyclic, and each nontrivial Q<=P has N=C or an inverting index-2 normalizer.
  {
    Claim c{"normalizer-dichotomy", S::NotApplicable, "needs odd p, p | |G| and an O-group"};
    if (odd && divides && o_group) {
      bool ok = p_cyclic;
      if (ok) {
        for (const auto& Q : cyclic_chain(P, p)) {
          Group NQ = normalizer(G, Q), CQ = centralizer(G, Q);
          if (NQ.order() == CQ.order()) continue;
          ok = ok && NQ.order() == 2 * CQ.order() && is_abelian(CQ) && outside_inverts(NQ, CQ);
        }
      }
      c.status = verdict(ok);
      c.detail = "Sylow cyclic; every Q has N=C or index 2 with inverting involutions";
    }
    out.push_back(c);
  }
  // Odd p, P cyclic: G=RP <=> N_G(P)=C_G(P) <=> N=C for all Q; and then an O-group.
  {
    Claim c{"rp-iff-normalizer-equals-centralizer", S::NotApplicable,
            "needs odd p, p | |G| and cyclic Sylow"};
    if (odd && divides && p_cyclic) {
      const bool rp = R.order() * P.order() == G.order();
      bool all = true;
      for (const auto& Q : cyclic_chain(P, p)) {
        if (normalizer(G, Q).order() != centralizer(G, Q).order()) all = false;
      }
      bool ok = rp == n_eq_c && n_eq_c == all;
      if (ok && rp) ok = is_o_group_by_definition(G, p).is_o_group;
      c.status = verdict(ok);
      c.detail = std::string("G=RP is ") + (rp ? "true" : "false");
    }
    out.push_back(c);
  }
  // Odd p, O-group, N != C: tau inverts C_G(P); C_G(Q)=C_G(P) abelian; N_G(Q)=N_G(P).
  {
    Claim c{"index-two-normalizer-structure", S::NotApplicable,
            "needs odd p, an O-group and N_G(P) != C_G(P)"};
    if (odd && divides && o_group && !n_eq_c) {
      bool ok = is_abelian(*C) && outside_inverts(*N, *C);
      for (const auto& Q : cyclic_chain(P, p)) {
        Group CQ = centralizer(G, Q), NQ = normalizer(G, Q);
        ok = ok && same_subgroup(CQ, *C) && same_subgroup(NQ, *N) && outside_inverts(NQ, CQ);
      }
      c.status = verdict(ok);
      c.detail = "C_G(Q)=C_G(P) abelian, N_G(Q)=N_G(P), N\\C inverting involutions";
    }
    out.push_back(c);
  }
  // Odd p, |G| odd: O-group <=> P cyclic and N=C <=> P cyclic and G=RP.
  {
    Claim c{"odd-order-criterion", S::NotApplicable, "needs odd p and |G| odd"};
    if (odd && G.order() % 2 == 1) {
      const bool def = is_o_group_by_definition(G, p).is_o_group;
      const bool b = p_cyclic && n_eq_c;
      const bool d = p_cyclic && R.order() * P.order() == G.order();
      c.status = verdict(def == b && b == d);
      c.detail = std::string("O-group is ") + (def ? "true" : "false");
    }
    out.push_back(c);
  }
  // Odd p, O-group, N != C: R = O_{p'}(G) solvable.
  {
    Claim c{"complement-solvable", S::NotApplicable,
            "needs odd p, an O-group and N_G(P) != C_G(P)"};
    if (odd && divides && o_group && !n_eq_c) {
      c.status = verdict(is_solvable(R));
      c.detail = "|R|=" + std::to_string(R.order());
    }
    out.push_back(c);
  }
  // p = 2, P cyclic: G = RP with R = O(G) solvable.
  {
    Claim c{"cyclic-sylow-two-splits", S::NotApplicable, "needs p=2 and cyclic Sylow"};
    if (!odd && p_cyclic) {
      c.status = verdict(R.order() * P.order() == G.order() && is_solvable(R));
      c.detail = "|R|=" + std::to_string(R.order());
    }
    out.push_back(c);
  }
  // p = 2, O-group, P noncyclic, Z(G) != 1.
  const bool two_noncyclic = !odd && o_group && !p_cyclic;
  std::optional<Group> Z;
  if (two_noncyclic) Z = center(G);
  {
    Claim c{"nontrivial-center-structure", S::NotApplicable,
            "needs p=2, an O-group, noncyclic Sylow and nontrivial center"};
    if (two_noncyclic && !Z->is_trivial()) {
      bool ok = (Z->order() == 2 || Z->order() == 4) && is_solvable(G);
      const bool klein = G.order() == 4 && is_abelian(G);
      bool case2 = Z->order() == 2 && is_abelian(R) && R.order() * P.order() == G.order();
      if (case2 && R.is_trivial()) {
        // G = P dihedral: C_P(R) = P, so the index-2 clause is read as applying only when R != 1.
        case2 = shape_of(P).kind == ShapeVerdict::Kind::Dihedral;
        c.detail = "R trivial, G = P dihedral; ";
      } else if (case2) {
        Group CPR = centralizer(P, R);
        case2 = is_cyclic(CPR) && CPR.order() * 2 == P.order();
        for (const auto& x : P.table().elements()) {
          if (!CPR.contains(x) && !inverts(x, R)) case2 = false;
        }
      }
      ok = ok && (klein || case2);
      c.status = verdict(ok);
      c.detail += "|Z(G)|=" + std::to_string(Z->order());
    }
    out.push_back(c);
  }
  // p = 2, O-group, P noncyclic, Z(G) = 1.
  {
    Claim c{"trivial-center-restrictions", S::NotApplicable,
            "needs p=2, an O-group, noncyclic Sylow and trivial center"};
    if (two_noncyclic && Z->is_trivial()) {
      Group O = odd_core(G);
      bool ok = is_nilpotent(derived_subgroup(O));
      auto kleins = klein_four_subgroups(P);
      if (!a4_embeds(G, kleins)) {
        ok = ok && O.order() * P.order() == G.order();
        for (const auto& K : kleins) ok = ok && centralizer(O, K).is_trivial();
      }
      c.status = verdict(ok);
      c.detail = "|O(G)|=" + std::to_string(O.order());
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace oortlab
