#include "oortlab/chief.hpp"

#include <algorithm>
#include <optional>

#include "oortlab/analysis.hpp"
#include "oortlab/arith.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/quotient.hpp"

namespace oortlab {

namespace {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

// A minimal normal subgroup of G inside the normal subgroup R: the smallest
// normal closure of an element of prime order lying in R.
Group minimal_normal_within(const Group& G, const Group& R) {
  const ElementTable& t = G.table();
  std::optional<Group> best;
  for (const auto& cls : conjugacy_classes(G)) {
    std::uint32_t x = cls.front();
    if (x == 0 || !is_prime(t.order_of(x)) || !R.contains(t.at(x))) continue;
    Group nc = normal_closure(G, {t.at(x)});
    if (!best || nc.order() < best->order()) best = std::move(nc);
  }
  if (!best) throw PreconditionFailed("no nontrivial element in the normal subgroup");
  return *best;
}

std::uint32_t coset_key(const ElementTable& t, const Permutation& h, const Group& lower) {
  std::uint32_t key = UINT32_MAX;
  for (const auto& n : lower.table().elements()) key = std::min(key, t.index_of(compose(h, n)));
  return key;
}

ChiefFactor make_factor(const Group& G, Group lower, Group upper) {
  ChiefFactor f{std::move(lower), std::move(upper), false, 0, 0, {}, nullptr};
  auto pp = prime_power(f.order());
  if (!pp) return f;
  f.r = pp->first;
  f.d = pp->second;

  bool elementary = true;
  const auto& ug = f.upper.generators();
  for (std::size_t i = 0; i < ug.size() && elementary; ++i) {
    if (!f.lower.contains(power(ug[i], static_cast<long long>(f.r)))) elementary = false;
    for (std::size_t j = i + 1; j < ug.size() && elementary; ++j) {
      if (!f.lower.contains(commutator(ug[i], ug[j]))) elementary = false;
    }
  }
  f.abelian = elementary;
  if (!elementary) {
    f.r = 0;
    f.d = 0;
    return f;
  }

  std::vector<Permutation> gens = f.lower.generators();
  StabilizerChain chain(G.degree(), gens);
  for (const auto& h : ug) {
    if (f.basis.size() == f.d) break;
    if (chain.contains(h)) continue;
    f.basis.push_back(h);
    gens.push_back(h);
    chain = StabilizerChain(G.degree(), gens);
  }

  if (f.order() <= kFactorLimit) {
    const ElementTable& t = G.table();
    auto coords = std::make_shared<FactorCoordinates>();
    std::vector<std::uint32_t> c(f.d, 0);
    while (true) {
      Permutation h = G.identity();
      for (unsigned i = 0; i < f.d; ++i) {
        if (c[i] != 0) h = compose(h, power(f.basis[i], c[i]));
      }
      coords->by_key.emplace(coset_key(t, h, f.lower), c);
      unsigned i = 0;
      while (i < f.d && ++c[i] == f.r) c[i++] = 0;
      if (i == f.d) break;
    }
    f.coordinates = std::move(coords);
  }
  return f;
}

}  // namespace

std::vector<ChiefFactor> chief_series_within(const Group& G, const Group& R) {
  if (!is_normal(G, R)) throw NotNormal("chief series needs a normal subgroup");
  std::vector<ChiefFactor> factors;
  Group N = Group::trivial(G.degree());
  while (N.order() < R.order()) {
    std::optional<Group> M;
    if (N.is_trivial()) {
      M = minimal_normal_within(G, R);
    } else {
      Quotient q = quotient_by(G, N);
      std::vector<Permutation> rim;
      for (const auto& x : R.generators()) rim.push_back(q.map.image(x));
      Group rbar(q.group.degree(), std::move(rim));
      Group mbar = minimal_normal_within(q.group, rbar);
      std::vector<Permutation> gens = N.generators();
      for (const auto& m : mbar.generators()) gens.push_back(q.map.lift(m));
      M = Group(G.degree(), std::move(gens));
    }
    factors.push_back(make_factor(G, N, *M));
    N = *M;
  }
  return factors;
}

std::vector<std::uint32_t> factor_coordinates(const Group& G, const ChiefFactor& X,
                                              const Permutation& h) {
  if (!X.coordinates) throw TooLarge("factor too large for coordinates");
  auto it = X.coordinates->by_key.find(coset_key(G.table(), h, X.lower));
  if (it == X.coordinates->by_key.end()) throw NonMember("element is not in the factor");
  return it->second;
}

FactorMatrix factor_action(const Group& G, const ChiefFactor& X, const Permutation& g) {
  if (!X.abelian) throw PreconditionFailed("factor_action needs an elementary abelian factor");
  if (!X.coordinates) throw TooLarge("factor order exceeds " + std::to_string(kFactorLimit));
  FactorMatrix m;
  m.entries.assign(X.d, std::vector<std::uint32_t>(X.d, 0));
  for (unsigned j = 0; j < X.d; ++j) {
    auto col = factor_coordinates(G, X, conjugate(g, X.basis[j]));
    for (unsigned i = 0; i < X.d; ++i) m.entries[i][j] = col[i];
  }
  std::uint64_t tr = 0;
  for (unsigned i = 0; i < X.d; ++i) tr += m.entries[i][i];
  m.trace_mod_r = static_cast<std::uint32_t>(tr % X.r);
  auto half = static_cast<long long>(X.r / 2);
  m.trace = m.trace_mod_r > half ? static_cast<long long>(m.trace_mod_r) - static_cast<long long>(X.r)
                                 : static_cast<long long>(m.trace_mod_r);
  return m;
}

unsigned rank_mod(std::vector<std::vector<std::uint32_t>> rows, std::uint64_t r) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  unsigned rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % r == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint64_t inv = pow_mod(rows[rank][c], r - 2, r);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % r);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] % r == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[i][k] = static_cast<std::uint32_t>((rows[i][k] + r * r - f * rows[rank][k] % r) % r);
      }
    }
    ++rank;
  }
  return rank;
}

bool acts_fixed_point_freely(const Group& G, const ChiefFactor& X,
                             const std::vector<Permutation>& elements) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& e : elements) {
    auto m = factor_action(G, X, e);
    for (unsigned i = 0; i < X.d; ++i) {
      auto row = m.entries[i];
      row[i] = static_cast<std::uint32_t>((row[i] + X.r - 1) % X.r);
      rows.push_back(std::move(row));
    }
  }
  return rank_mod(std::move(rows), X.r) == X.d;
}

}  // namespace oortlab
