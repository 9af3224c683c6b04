#pragma once

#include <cstdint>
#include <vector>

namespace oortlab {

/// GF(q) for q = r^k <= 256.
///
/// Elements are the integers 0..q-1; the base-r digits of an element are the
/// coefficients of its polynomial representative (lowest degree first). The
/// modulus is the least monic irreducible polynomial of degree k when its
/// lower coefficients are read as a base-r number.
class Field {
 public:
  using Element = std::uint32_t;

  std::uint32_t characteristic() const noexcept { return r_; }
  std::uint32_t extension_degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Coefficients c_0..c_k of the monic modulus (c_k == 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  /// Throws DivisionByZero for a == 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  /// Smallest element of multiplicative order q-1.
  Element primitive_element() const noexcept { return primitive_; }
  /// The basis 1, x, ..., x^(k-1) of GF(q) over GF(r).
  std::vector<Element> polynomial_basis() const;

  std::uint32_t multiplicative_order(Element a) const;

  friend Field field(std::uint32_t q);

 private:
  Field() = default;

  std::uint32_t r_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint8_t> add_, mul_;
  std::vector<std::uint8_t> neg_, inv_;
  Element primitive_ = 0;
};

/// Throws NotPrimePower or TooLarge (q > 256).
Field field(std::uint32_t q);

/// True iff the monic polynomial with coefficients `coeffs` (lowest first) is
/// irreducible over GF(r), by trial division with every monic polynomial of
/// degree at most half its degree.
bool is_irreducible(const std::vector<std::uint32_t>& coeffs, std::uint32_t r);

}  // namespace oortlab
