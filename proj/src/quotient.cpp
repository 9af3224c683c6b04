#include "oortlab/quotient.hpp"

#include "oortlab/errors.hpp"

namespace oortlab {

bool is_normal(const Group& G, const Group& N) {
  if (!is_subgroup(N, G)) return false;
  for (const auto& g : G.generators()) {
    for (const auto& n : N.generators()) {
      if (!N.contains(conjugate(g, n))) return false;
    }
  }
  return true;
}

QuotientMap::QuotientMap(Group source, Group kernel)
    : source_(std::move(source)), kernel_(std::move(kernel)) {
  const ElementTable& t = source_.table();
  const auto& nelems = kernel_.table().elements();
  coset_.assign(t.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (coset_[i] != UINT32_MAX) continue;
    auto c = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(i);
    for (const auto& n : nelems) coset_[t.index_of(compose(t.at(i), n))] = c;
  }
}

std::uint32_t QuotientMap::coset_of(const Permutation& g) const {
  return coset_[source_.table().index_of(g)];
}

const Permutation& QuotientMap::representative(std::uint32_t c) const {
  return source_.table().at(reps_.at(c));
}

Permutation QuotientMap::image(const Permutation& g) const {
  const ElementTable& t = source_.table();
  std::vector<Point> im(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    im[c] = static_cast<Point>(coset_[t.index_of(compose(g, t.at(reps_[c])))]);
  }
  return Permutation(std::move(im));
}

Permutation QuotientMap::lift(const Permutation& q) const {
  if (q.degree() != reps_.size()) throw DegreeMismatch("quotient permutation has wrong degree");
  // The coset of the identity is number 0; q sends it to the coset of its preimage.
  return representative(q(0));
}

Quotient quotient_by(const Group& G, const Group& N) {
  if (!is_normal(G, N)) throw NotNormal("subgroup is not normal in the group");
  std::uint64_t index = G.order() / N.order();
  if (index > kMaxDegree) throw TooLarge("quotient index exceeds the supported degree");
  QuotientMap map(G, N);
  std::vector<Permutation> gens;
  for (const auto& g : G.generators()) gens.push_back(map.image(g));
  Group q(map.index(), std::move(gens));
  return Quotient{std::move(q), std::move(map)};
}

}  // namespace oortlab
