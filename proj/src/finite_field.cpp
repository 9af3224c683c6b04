#include "oortlab/finite_field.hpp"

#include <string>

#include "oortlab/arith.hpp"
#include "oortlab/errors.hpp"

namespace oortlab {

namespace {

using Poly = std::vector<std::uint32_t>;  // lowest coefficient first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t r) {
  for (std::uint32_t x = 1; x < r; ++x) {
    if ((a * x) % r == 1) return x;
  }
  throw DivisionByZero("no inverse modulo " + std::to_string(r));
}

// Remainder of a modulo the nonzero polynomial m over GF(r).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t r) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), r);
  while (a.size() >= m.size()) {
    std::uint32_t factor = (a.back() * lead_inv) % r;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + r * r - factor * m[i] % r) % r;
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint32_t value, std::uint32_t r, std::uint32_t k) {
  Poly p(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    p[i] = value % r;
    value /= r;
  }
  return p;
}

std::uint32_t encode(const Poly& p, std::uint32_t r) {
  std::uint32_t v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * r + p[i];
  return v;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t r) {
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= n; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= r;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = digits(low, r, d);
      g.push_back(1);
      if (poly_mod(f, g, r).empty()) return false;
    }
  }
  return true;
}

Field field(std::uint32_t q) {
  if (q > 256) throw TooLarge("field size " + std::to_string(q) + " exceeds 256");
  auto pp = prime_power(q);
  if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  Field F;
  F.r_ = static_cast<std::uint32_t>(pp->first);
  F.k_ = pp->second;
  F.q_ = q;
  const std::uint32_t r = F.r_, k = F.k_;

  // Least monic irreducible of degree k.
  for (std::uint32_t low = 0; low < q; ++low) {
    Poly m = digits(low, r, k);
    m.push_back(1);
    if (is_irreducible(m, r)) {
      F.modulus_ = m;
      break;
    }
  }
  if (F.modulus_.empty()) throw PreconditionFailed("no irreducible polynomial found");

  F.add_.resize(static_cast<std::size_t>(q) * q);
  F.mul_.resize(static_cast<std::size_t>(q) * q);
  F.neg_.resize(q);
  F.inv_.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    Poly pa = digits(a, r, k);
    Poly na(k);
    for (std::uint32_t i = 0; i < k; ++i) na[i] = (r - pa[i]) % r;
    F.neg_[a] = static_cast<std::uint8_t>(encode(na, r));
    for (std::uint32_t b = 0; b < q; ++b) {
      Poly pb = digits(b, r, k);
      Poly sum(k);
      for (std::uint32_t i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % r;
      F.add_[a * q + b] = static_cast<std::uint8_t>(encode(sum, r));
      Poly prod(2 * k, 0);
      for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % r;
      }
      Poly rem = poly_mod(prod, F.modulus_, r);
      rem.resize(k, 0);
      F.mul_[a * q + b] = static_cast<std::uint8_t>(encode(rem, r));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    for (std::uint32_t b = 1; b < q; ++b) {
      if (F.mul(a, b) == 1) {
        F.inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    if (F.multiplicative_order(a) == q - 1) {
      F.primitive_ = a;
      break;
    }
  }
  if (q > 2 && F.primitive_ == 0) throw PreconditionFailed("multiplicative group is not cyclic");
  if (q == 2) F.primitive_ = 1;
  return F;
}

Field::Element Field::inv(Element a) const {
  if (a == 0 || a >= q_) throw DivisionByZero("zero has no multiplicative inverse");
  return inv_[a];
}

Field::Element Field::pow(Element a, std::uint64_t e) const {
  Element result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::multiplicative_order(Element a) const {
  if (a == 0) throw DivisionByZero("zero has no multiplicative order");
  std::uint32_t n = 1;
  Element x = a;
  while (x != 1) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::vector<Field::Element> Field::polynomial_basis() const {
  std::vector<Element> b;
  Element e = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    b.push_back(e);
    e *= r_;
  }
  return b;
}

}  // namespace oortlab
