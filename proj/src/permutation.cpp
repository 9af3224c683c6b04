#include "oortlab/permutation.hpp"

#include <numeric>
#include <sstream>

#include "oortlab/errors.hpp"

namespace oortlab {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree) {
    throw RangeError("permutation degree must be in [1, 65535]");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw RangeError("image table is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw RangeError("permutation degree must be in [1, 65535]");
  }
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::size_t x = cyc[i];
      if (x >= degree || used[x]) {
        throw RangeError("cycles must be disjoint and within the degree");
      }
      used[x] = true;
      p.images_[x] = static_cast<Point>(cyc[(i + 1) % cyc.size()]);
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return images_.size();
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    std::size_t x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      first = false;
      done[x] = true;
      x = images_[x];
    } while (x != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  }
  std::vector<Point> im(a.degree());
  const Point* pa = a.images_.data();
  const Point* pb = b.images_.data();
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = pa[pb[i]];
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& a) {
  std::vector<Point> im(a.degree());
  for (std::size_t i = 0; i < im.size(); ++i) im[a.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
  return compose(compose(g, h), inverse(g));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(inverse(a), inverse(b)), compose(a, b));
}

Permutation power(const Permutation& a, long long k) {
  Permutation base = k < 0 ? inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(a.degree());
  while (e > 0) {
    if (e & 1ULL) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

std::uint64_t element_order(const Permutation& a) {
  std::uint64_t ord = 1;
  std::vector<bool> done(a.degree(), false);
  for (std::size_t start = 0; start < a.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    std::size_t x = start;
    do {
      done[x] = true;
      x = a(static_cast<Point>(x));
      ++len;
    } while (x != start);
    std::uint64_t g = std::gcd(ord, len);
    std::uint64_t factor = len / g;
    if (ord > UINT64_MAX / factor) throw TooLarge("element order overflows 64 bits");
    ord *= factor;
  }
  return ord;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

}  // namespace oortlab
