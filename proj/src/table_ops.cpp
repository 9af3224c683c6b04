#include "table_ops.hpp"

#include <algorithm>

namespace oortlab::detail {

Index conj(const ElementTable& t, Index g, Index x) {
  const Permutation& pg = t.at(g);
  const Permutation& px = t.at(x);
  // (g x g^-1)(g(y)) = g(x(y))
  std::vector<Point> im(pg.degree());
  for (std::size_t y = 0; y < im.size(); ++y) im[pg(static_cast<Point>(y))] = pg(px(static_cast<Point>(y)));
  return t.index_of(Permutation(std::move(im)));
}

std::vector<Index> closure(const ElementTable& t, const std::vector<Index>& gens) {
  std::vector<char> seen(t.size(), 0);
  std::vector<Index> out{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Index g : gens) {
      Index y = t.multiply(out[k], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> powers(const ElementTable& t, Index x) {
  std::vector<Index> out{0};
  Index y = x;
  while (y != 0) {
    out.push_back(y);
    y = t.multiply(y, x);
  }
  return out;
}

std::vector<char> mask_of(std::size_t n, const std::vector<Index>& members) {
  std::vector<char> m(n, 0);
  for (Index i : members) m[i] = 1;
  return m;
}

std::vector<Index> normalizing(const ElementTable& t, const std::vector<char>& mask,
                               const std::vector<Index>& gens, const std::vector<Index>* domain) {
  std::vector<Index> out;
  auto test = [&](Index g) {
    for (Index s : gens) {
      if (!mask[conj(t, g, s)]) return;
    }
    out.push_back(g);
  };
  if (domain != nullptr) {
    for (Index g : *domain) test(g);
  } else {
    for (Index g = 0; g < t.size(); ++g) test(g);
  }
  return out;
}

bool commute(const Permutation& a, const Permutation& b) {
  for (std::size_t x = 0; x < a.degree(); ++x) {
    auto p = static_cast<Point>(x);
    if (a(b(p)) != b(a(p))) return false;
  }
  return true;
}

std::vector<Index> centralizing(const ElementTable& t, const std::vector<Index>& gens,
                                const std::vector<Index>* domain) {
  std::vector<Index> out;
  auto test = [&](Index g) {
    for (Index s : gens) {
      if (!commute(t.at(g), t.at(s))) return;
    }
    out.push_back(g);
  };
  if (domain != nullptr) {
    for (Index g : *domain) test(g);
  } else {
    for (Index g = 0; g < t.size(); ++g) test(g);
  }
  return out;
}

std::vector<Index> generator_indices(const ElementTable& t, const Group& H) {
  std::vector<Index> out;
  for (const auto& h : H.generators()) {
    Index i = t.index_of(h);
    if (i != 0) out.push_back(i);
  }
  return out;
}

}  // namespace oortlab::detail
