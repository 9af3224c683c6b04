#include "oortlab/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "oortlab/arith.hpp"
#include "oortlab/errors.hpp"
#include "table_ops.hpp"

namespace oortlab {

using detail::Index;

namespace {

// Subgroup generated by `candidates`, keeping only those not already reached.
Group generated_greedy(std::size_t degree, const std::vector<Permutation>& candidates) {
  std::vector<Permutation> gens;
  StabilizerChain chain(degree, gens);
  for (const auto& c : candidates) {
    if (c.is_identity() || chain.contains(c)) continue;
    gens.push_back(c);
    chain = StabilizerChain(degree, gens);
  }
  return Group(degree, std::move(gens));
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not a prime");
}

}  // namespace

Group centralizer(const Group& G, const std::vector<Permutation>& elements) {
  const ElementTable& t = G.table();
  std::vector<Index> out;
  for (Index g = 0; g < t.size(); ++g) {
    bool ok = true;
    for (const auto& s : elements) {
      if (s.degree() != G.degree()) throw DegreeMismatch("centralizer of a set of wrong degree");
      if (!detail::commute(t.at(g), s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return subgroup_from_indices(G, std::move(out));
}

Group centralizer(const Group& G, const Group& S) { return centralizer(G, S.generators()); }

Group normalizer(const Group& G, const Group& H) {
  if (!is_subgroup(H, G)) throw NonSubgroup("normalizer of a subset that is not a subgroup");
  const ElementTable& t = G.table();
  auto mask = detail::mask_of(t.size(), element_indices(G, H));
  auto gens = detail::generator_indices(t, H);
  return subgroup_from_indices(G, detail::normalizing(t, mask, gens));
}

Group center(const Group& G) { return centralizer(G, G); }

Group sylow(const Group& G, std::uint64_t p) {
  require_prime(p);
  const std::uint64_t target = p_part(G.order(), p);
  if (target == 1) return Group::trivial(G.degree());
  const ElementTable& t = G.table();
  auto is_p_element = [&](Index i) { return i != 0 && p_part(t.order_of(i), p) == t.order_of(i); };

  Index start = 0;
  for (Index i = 1; i < t.size(); ++i) {
    if (is_p_element(i) && t.order_of(i) > t.order_of(start)) start = i;
  }
  std::vector<Index> gens{start};
  std::vector<Index> P = detail::closure(t, gens);
  while (P.size() < target) {
    auto mask = detail::mask_of(t.size(), P);
    auto N = detail::normalizing(t, mask, gens);
    Index extra = 0;
    for (Index y : N) {
      if (!mask[y] && is_p_element(y)) {
        extra = y;
        break;
      }
    }
    if (extra == 0) throw PreconditionFailed("Sylow growth stalled; inconsistent element store");
    gens.push_back(extra);
    P = detail::closure(t, gens);
  }
  return subgroup_from_indices(G, std::move(P));
}

Group omega1(const Group& P, std::uint64_t p) {
  if (!is_p_group(P, p)) throw NotPGroup("omega1 needs a " + std::to_string(p) + "-group");
  const ElementTable& t = P.table();
  std::vector<Permutation> cands;
  for (Index i = 1; i < t.size(); ++i) {
    if (t.order_of(i) == p) cands.push_back(t.at(i));
  }
  return generated_greedy(P.degree(), cands);
}

Group normal_closure(const Group& G, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  StabilizerChain chain(G.degree(), gens);
  std::vector<Permutation> queue;
  auto add = [&](const Permutation& x) {
    if (x.is_identity() || chain.contains(x)) return;
    gens.push_back(x);
    queue.push_back(x);
    chain = StabilizerChain(G.degree(), gens);
  };
  for (const auto& e : elements) {
    if (!G.contains(e)) throw NonMember(e.cycle_string() + " is not an element of the group");
    add(e);
  }
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& g : G.generators()) add(conjugate(g, queue[k]));
  }
  return Group(G.degree(), std::move(gens));
}

Group o_pi(const Group& G, const std::vector<std::uint64_t>& primes) {
  const ElementTable& t = G.table();
  std::vector<Permutation> gens;
  StabilizerChain current(G.degree(), gens);
  for (const auto& cls : conjugacy_classes(G)) {
    Index x = cls.front();
    if (x == 0 || !is_pi_number(t.order_of(x), primes)) continue;
    if (current.contains(t.at(x))) continue;
    Group nc = normal_closure(G, {t.at(x)});
    if (!is_pi_number(nc.order(), primes)) continue;
    gens.insert(gens.end(), nc.generators().begin(), nc.generators().end());
    current = StabilizerChain(G.degree(), gens);
  }
  return Group(G.degree(), std::move(gens));
}

Group o_p(const Group& G, std::uint64_t p) {
  require_prime(p);
  return o_pi(G, {p});
}

Group o_p_prime(const Group& G, std::uint64_t p) {
  require_prime(p);
  std::vector<std::uint64_t> primes;
  for (auto r : prime_divisors(G.order())) {
    if (r != p) primes.push_back(r);
  }
  return o_pi(G, primes);
}

Group odd_core(const Group& G) { return o_p_prime(G, 2); }

Group derived_subgroup(const Group& G) {
  std::vector<Permutation> comms;
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  }
  return normal_closure(G, comms);
}

std::vector<Group> derived_series(const Group& G) {
  std::vector<Group> series{G};
  while (true) {
    Group next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Group> lower_central_series(const Group& G) {
  std::vector<Group> series{G};
  while (true) {
    std::vector<Permutation> comms;
    for (const auto& a : series.back().generators()) {
      for (const auto& g : G.generators()) comms.push_back(commutator(a, g));
    }
    Group next = normal_closure(G, comms);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_abelian(const Group& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!detail::commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool is_solvable(const Group& G) { return derived_series(G).back().is_trivial(); }
bool is_nilpotent(const Group& G) { return lower_central_series(G).back().is_trivial(); }
bool is_perfect(const Group& G) { return derived_subgroup(G).order() == G.order(); }

Predicates predicates(const Group& G) {
  Predicates out;
  out.abelian = is_abelian(G);
  out.solvable = is_solvable(G);
  out.nilpotent = out.abelian || is_nilpotent(G);
  out.perfect = is_perfect(G);
  return out;
}

bool is_cyclic(const Group& G) {
  if (!is_abelian(G)) return false;
  // An abelian group is cyclic iff its exponent (lcm of generator orders) is its order.
  std::uint64_t exponent = 1;
  for (const auto& g : G.generators()) exponent = std::lcm(exponent, element_order(g));
  return exponent == G.order();
}

bool is_p_group(const Group& G, std::uint64_t p) { return p_part(G.order(), p) == G.order(); }

bool is_simple(const Group& G) {
  const std::uint64_t n = G.order();
  if (n == 1) return false;
  if (is_prime(n)) return true;
  if (is_abelian(G)) return false;
  const ElementTable& t = G.table();
  for (const auto& cls : conjugacy_classes(G)) {
    if (cls.front() == 0) continue;
    if (normal_closure(G, {t.at(cls.front())}).order() != n) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const Group& G) {
  const ElementTable& t = G.table();
  auto gens = detail::generator_indices(t, G);
  std::vector<char> seen(t.size(), 0);
  std::vector<std::vector<std::uint32_t>> classes;
  for (Index i = 0; i < t.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Index> cls{i};
    seen[i] = 1;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (Index g : gens) {
        Index y = detail::conj(t, g, cls[k]);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Group> minimal_normal_subgroups(const Group& G) {
  const ElementTable& t = G.table();
  // Every minimal normal subgroup is the closure of any of its elements of prime order.
  std::vector<Group> closures;
  for (const auto& cls : conjugacy_classes(G)) {
    Index x = cls.front();
    if (x == 0 || !is_prime(t.order_of(x))) continue;
    Group nc = normal_closure(G, {t.at(x)});
    bool dup = std::any_of(closures.begin(), closures.end(),
                           [&](const Group& c) { return same_subgroup(c, nc); });
    if (!dup) closures.push_back(std::move(nc));
  }
  std::vector<Group> out;
  for (const auto& a : closures) {
    bool minimal = std::none_of(closures.begin(), closures.end(), [&](const Group& b) {
      return b.order() < a.order() && is_subgroup(b, a);
    });
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<Group> klein_four_subgroups(const Group& H) {
  const ElementTable& t = H.table();
  std::vector<Index> inv;
  for (Index i = 1; i < t.size(); ++i) {
    if (t.order_of(i) == 2) inv.push_back(i);
  }
  std::set<std::vector<Index>> seen;
  std::vector<Group> out;
  for (std::size_t a = 0; a < inv.size(); ++a) {
    for (std::size_t b = a + 1; b < inv.size(); ++b) {
      if (!detail::commute(t.at(inv[a]), t.at(inv[b]))) continue;
      std::vector<Index> key{inv[a], inv[b], t.multiply(inv[a], inv[b])};
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      out.push_back(Group(H.degree(), {t.at(inv[a]), t.at(inv[b])}));
    }
  }
  return out;
}

}  // namespace oortlab
