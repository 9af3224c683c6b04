#include "oortlab/cyclic_by_p.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <numeric>
#include <set>

#include "oortlab/analysis.hpp"
#include "oortlab/arith.hpp"
#include "oortlab/errors.hpp"
#include "table_ops.hpp"

namespace oortlab {

using detail::Index;

namespace {

constexpr std::size_t kLatticeLimit = 2048;

using Bits = std::vector<std::uint64_t>;

struct LocalSubgroup {
  Bits bits;
  std::vector<Index> elements;  // local, sorted
  std::vector<Index> gens;      // local
};

// Subgroup lattice of the group whose elements are `elems` (sorted ambient
// indices, identity first), built from cyclic subgroups by repeated joins.
class Lattice {
 public:
  Lattice(const ElementTable& t, const std::vector<Index>& elems) : n_(elems.size()) {
    if (n_ > kLatticeLimit) throw TooLarge("subgroup lattice limited to groups of order 2048");
    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        Index g = t.multiply(elems[a], elems[b]);
        mul_[a * n_ + b] = static_cast<Index>(
            std::lower_bound(elems.begin(), elems.end(), g) - elems.begin());
      }
    }
    std::vector<Index> cyclic_gens;
    for (Index x = 0; x < n_; ++x) {
      if (add({x})) cyclic_gens.push_back(x);
    }
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      for (Index c : cyclic_gens) {
        if (has(subs_[i].bits, c)) continue;
        auto gens = subs_[i].gens;
        gens.push_back(c);
        add(std::move(gens));
      }
    }
  }

  std::size_t size() const { return n_; }
  const std::vector<LocalSubgroup>& subgroups() const { return subs_; }
  std::optional<std::size_t> find(const Bits& b) const {
    auto it = index_.find(b);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static bool has(const Bits& b, Index x) { return (b[x / 64] >> (x % 64)) & 1U; }

  bool add(std::vector<Index> gens) {
    Bits bits((n_ + 63) / 64, 0);
    std::vector<Index> el{0};
    bits[0] |= 1;
    for (std::size_t k = 0; k < el.size(); ++k) {
      for (Index g : gens) {
        Index y = mul_[el[k] * n_ + g];
        if (!has(bits, y)) {
          bits[y / 64] |= std::uint64_t{1} << (y % 64);
          el.push_back(y);
        }
      }
    }
    if (index_.count(bits) != 0) return false;
    std::sort(el.begin(), el.end());
    gens.erase(std::remove(gens.begin(), gens.end(), Index{0}), gens.end());
    index_.emplace(bits, subs_.size());
    subs_.push_back({std::move(bits), std::move(el), std::move(gens)});
    return true;
  }

  std::size_t n_;
  std::vector<Index> mul_;
  std::vector<LocalSubgroup> subs_;
  std::map<Bits, std::size_t> index_;
};

}  // namespace

CyclicByPResult is_cyclic_by_p(const Group& H, std::uint64_t p) {
  Group op = o_p(H, p);
  CyclicByPResult out;
  if (op.order() != p_part(H.order(), p)) return out;
  const std::uint64_t m = H.order() / op.order();
  // H/O_p is a p'-group; the image of h has the order of the p'-part of h.
  const ElementTable& t = H.table();
  for (Index i = 0; i < t.size(); ++i) {
    std::uint64_t o = t.order_of(i);
    if (o / p_part(o, p) == m) {
      out.cyclic_by_p = true;
      out.op = std::move(op);
      out.quotient_order = m;
      return out;
    }
  }
  return out;
}

std::uint64_t visit_cyclic_by_p(const Group& G, std::uint64_t p,
                                const std::function<bool(const CyclicByPCandidate&)>& visit) {
  if (!is_prime(p)) throw RangeError(std::to_string(p) + " is not a prime");
  const ElementTable& t = G.table();
  Group P = sylow(G, p);
  const std::vector<Index> pidx = element_indices(G, P);
  Lattice lattice(t, pidx);
  const auto& subs = lattice.subgroups();

  // Merge subgroups of P conjugate under N_G(P).
  std::vector<std::vector<Index>> local_perms;
  for (Index n : detail::generator_indices(t, normalizer(G, P))) {
    std::vector<Index> perm(pidx.size());
    for (std::size_t a = 0; a < pidx.size(); ++a) {
      Index img = detail::conj(t, n, pidx[a]);
      perm[a] = static_cast<Index>(std::lower_bound(pidx.begin(), pidx.end(), img) - pidx.begin());
    }
    local_perms.push_back(std::move(perm));
  }
  std::vector<char> covered(subs.size(), 0);
  std::vector<std::size_t> reps;
  for (std::size_t s = 0; s < subs.size(); ++s) {
    if (covered[s]) continue;
    reps.push_back(s);
    covered[s] = 1;
    std::vector<std::size_t> orbit{s};
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& perm : local_perms) {
        Bits img(subs[orbit[k]].bits.size(), 0);
        for (Index a : subs[orbit[k]].elements) img[perm[a] / 64] |= std::uint64_t{1} << (perm[a] % 64);
        auto j = lattice.find(img);
        if (j && !covered[*j]) {
          covered[*j] = 1;
          orbit.push_back(*j);
        }
      }
    }
  }

  std::uint64_t visited_count = 0;
  std::vector<char> mask(t.size(), 0);
  std::vector<char> used(t.size(), 0);
  for (std::size_t s : reps) {
    std::vector<Index> qel, qgens;
    for (Index a : subs[s].elements) qel.push_back(pidx[a]);
    for (Index a : subs[s].gens) qgens.push_back(pidx[a]);
    std::fill(mask.begin(), mask.end(), 0);
    for (Index q : qel) mask[q] = 1;
    std::fill(used.begin(), used.end(), 0);
    std::set<std::vector<Index>> seen;

    for (Index x : detail::normalizing(t, mask, qgens)) {
      std::uint64_t ord = t.order_of(x);
      if (ord % p == 0 || used[x]) continue;
      auto cyc = detail::powers(t, x);
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        if (std::gcd(k, cyc.size()) == 1 || cyc.size() == 1) used[cyc[k]] = 1;
      }
      std::vector<Index> h;
      h.reserve(qel.size() * cyc.size());
      for (Index q : qel) {
        for (Index c : cyc) h.push_back(t.multiply(q, c));
      }
      std::sort(h.begin(), h.end());
      if (!seen.insert(h).second) continue;
      ++visited_count;
      if (!visit(CyclicByPCandidate{h, qgens, x, qel.size()})) return visited_count;
    }
  }
  return visited_count;
}

std::vector<Group> cyclic_by_p_subgroups(const Group& G, std::uint64_t p) {
  std::vector<Group> out;
  visit_cyclic_by_p(G, p, [&](const CyclicByPCandidate& c) {
    out.push_back(subgroup_from_indices(G, c.elements));
    return true;
  });
  return out;
}

std::vector<std::vector<std::uint32_t>> all_subgroups(const Group& H) {
  const ElementTable& t = H.table();
  std::vector<Index> all(t.size());
  std::iota(all.begin(), all.end(), Index{0});
  Lattice lattice(t, all);
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& s : lattice.subgroups()) out.push_back(s.elements);
  return out;
}

}  // namespace oortlab
