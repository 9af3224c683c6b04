#include "oortlab/verdict.hpp"

#include <algorithm>
#include <optional>

#include "oortlab/analysis.hpp"
#include "oortlab/arith.hpp"
#include "oortlab/cyclic_by_p.hpp"
#include "oortlab/errors.hpp"

namespace oortlab {

std::string to_string(Route r) {
  switch (r) {
    case Route::Definition: return "definition";
    case Route::CriterionOdd: return "criterion-odd";
    case Route::CriterionTwo: return "criterion-two";
  }
  return "unknown";
}

namespace {

std::vector<Permutation> candidate_generators(const ElementTable& t, const CyclicByPCandidate& c) {
  std::vector<Permutation> gens;
  for (auto q : c.q_generators) gens.push_back(t.at(q));
  if (c.t != 0) gens.push_back(t.at(c.t));
  if (gens.empty()) gens.push_back(t.at(0));
  return gens;
}

// First disallowed cyclic-by-p subgroup in the enumeration.
std::optional<Witness> search_witness(const Group& G, std::uint64_t p) {
  const ElementTable& t = G.table();
  std::optional<Witness> found;
  visit_cyclic_by_p(G, p, [&](const CyclicByPCandidate& c) {
    ShapeVerdict s = shape_of_elements(t, c.elements);
    if (allowed_shape(s, p)) return true;
    found = Witness{candidate_generators(t, c), s.order, s};
    return false;
  });
  return found;
}

Witness whole_group_witness(const Group& H) {
  ShapeVerdict s = shape_of(H);
  return Witness{H.generators(), H.order(), s};
}

OortVerdict criterion_odd(const Group& G, std::uint64_t p, OortVerdict v) {
  Group P = sylow(G, p);
  if (!is_cyclic(P)) {
    v.is_o_group = false;
    v.branch = "Sylow not cyclic";
    v.witnesses.push_back(whole_group_witness(P));
    return v;
  }
  if (normalizer(G, P).order() == centralizer(G, P).order()) {
    v.branch = "N=C";
    return v;
  }
  Group Q = omega1(P, p);
  Group CQ = centralizer(G, Q);
  Group NQ = normalizer(G, Q);
  bool ok = is_abelian(CQ);
  if (ok) {
    for (const auto& x : NQ.table().elements()) {
      if (CQ.contains(x)) continue;
      if (element_order(x) != 2) {
        ok = false;
        break;
      }
      for (const auto& c : CQ.generators()) {
        if (compose(compose(x, c), x) != inverse(c)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
  }
  if (ok) {
    v.branch = "index-2 inversion";
    return v;
  }
  v.is_o_group = false;
  v.branch = "N!=C without inverting involutions";
  if (auto w = search_witness(G, p)) v.witnesses.push_back(std::move(*w));
  return v;
}

OortVerdict criterion_two(const Group& G, OortVerdict v) {
  Group P = sylow(G, 2);
  if (is_cyclic(P)) {
    v.branch = "Sylow cyclic";
    return v;
  }
  if (shape_of(P).kind != ShapeVerdict::Kind::Dihedral) {
    v.is_o_group = false;
    v.branch = "Sylow neither cyclic nor dihedral";
    v.witnesses.push_back(whole_group_witness(P));
    return v;
  }
  for (const auto& K : klein_four_subgroups(P)) {
    Group CK = centralizer(G, K);
    if (CK.order() == 4) continue;
    v.is_o_group = false;
    v.branch = "Klein four not self-centralizing";
    // <K, y> with y in C_G(K) \ K is abelian, non-cyclic and not dihedral.
    // An odd-order y keeps it cyclic-by-2 with a cyclic quotient.
    const ElementTable& t = CK.table();
    std::optional<Permutation> y;
    for (const auto& x : t.elements()) {
      if (K.contains(x)) continue;
      if (element_order(x) % 2 == 1) {
        y = x;
        break;
      }
      if (!y) y = x;
    }
    std::vector<Permutation> gens = K.generators();
    gens.push_back(*y);
    Group H(G.degree(), gens);
    ShapeVerdict s = shape_of(H);
    v.witnesses.push_back(Witness{std::move(gens), H.order(), s});
    return v;
  }
  v.branch = "Sylow dihedral, Klein fours self-centralizing";
  return v;
}

}  // namespace

OortVerdict is_o_group_by_definition(const Group& G, std::uint64_t p) {
  OortVerdict v;
  v.route = Route::Definition;
  v.p = p;
  const ElementTable& t = G.table();
  v.examined = visit_cyclic_by_p(G, p, [&](const CyclicByPCandidate& c) {
    ShapeVerdict s = shape_of_elements(t, c.elements);
    if (allowed_shape(s, p)) return true;
    bool known = std::any_of(v.witnesses.begin(), v.witnesses.end(),
                             [&](const Witness& w) { return w.shape == s; });
    if (!known) v.witnesses.push_back(Witness{candidate_generators(t, c), s.order, s});
    return true;
  });
  v.is_o_group = v.witnesses.empty();
  v.branch = v.is_o_group ? "every cyclic-by-p subgroup allowed" : "disallowed cyclic-by-p subgroups";
  return v;
}

OortVerdict is_o_group_by_criterion(const Group& G, std::uint64_t p) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not a prime");
  OortVerdict v;
  v.route = p == 2 ? Route::CriterionTwo : Route::CriterionOdd;
  v.p = p;
  if (G.order() % p != 0) {
    v.branch = "p does not divide |G|";
    return v;
  }
  return p == 2 ? criterion_two(G, std::move(v)) : criterion_odd(G, p, std::move(v));
}

bool verify_witness(const Group& G, const Witness& w, std::uint64_t p) {
  for (const auto& g : w.generators) {
    if (!G.contains(g)) return false;
  }
  Group H(G.degree(), w.generators);
  if (H.order() != w.order) return false;
  ShapeVerdict s = shape_of(H);
  return s == w.shape && !allowed_shape(s, p) && is_cyclic_by_p(H, p).cyclic_by_p;
}

}  // namespace oortlab
