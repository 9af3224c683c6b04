#include <random>

#include "doctest.h"
#include "oortlab/arith.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/finite_field.hpp"

using namespace oortlab;

TEST_CASE("arithmetic helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(p_part(360, 2) == 8);
  CHECK(p_part(360, 7) == 1);
  CHECK(prime_power(64) == std::make_pair<std::uint64_t, unsigned>(2, 6));
  CHECK_FALSE(prime_power(12).has_value());
  CHECK_FALSE(prime_power(1).has_value());
  CHECK(prime_divisors(20160) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(is_pi_number(45, {3, 5}));
  CHECK_FALSE(is_pi_number(30, {3, 5}));
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(field(6), NotPrimePower);
  CHECK_THROWS_AS(field(1), NotPrimePower);
  CHECK_THROWS_AS(field(512), TooLarge);
}

TEST_CASE("irreducibility test") {
  CHECK(is_irreducible({1, 1, 1}, 2));     // x^2 + x + 1
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // (x + 1)^2
  CHECK(is_irreducible({1, 1, 0, 1}, 2));  // x^3 + x + 1
  CHECK(is_irreducible({1, 0, 1}, 3));     // x^2 + 1 over GF(3)
  CHECK_FALSE(is_irreducible({1, 0, 1}, 5));  // x^2 + 1 = (x - 2)(x + 2) over GF(5)
}

TEST_CASE("field axioms for every supported order") {
  std::mt19937 rng(7);
  for (std::uint32_t q = 2; q <= 256; ++q) {
    auto pp = prime_power(q);
    if (!pp) continue;
    CAPTURE(q);
    Field f = field(q);
    CHECK(f.size() == q);
    CHECK(f.characteristic() == pp->first);
    CHECK(f.extension_degree() == pp->second);
    CHECK(is_irreducible(f.modulus(), f.characteristic()));
    CHECK(f.multiplicative_order(f.primitive_element()) == q - 1);
    CHECK(f.polynomial_basis().size() == f.extension_degree());
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int i = 0; i < 60; ++i) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(f.add(a, b), b) == a);
      // Frobenius is additive.
      const std::uint32_t r = f.characteristic();
      CHECK(f.pow(f.add(a, b), r) == f.add(f.pow(a, r), f.pow(b, r)));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    CHECK(f.pow(f.primitive_element(), q - 1) == 1);
  }
}
