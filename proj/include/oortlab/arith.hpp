#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oortlab {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Distinct primes dividing n.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// (r, k) with n == r^k and r prime, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);

/// True iff every prime divisor of n lies in `primes`.
bool is_pi_number(std::uint64_t n, const std::vector<std::uint64_t>& primes);

}  // namespace oortlab
