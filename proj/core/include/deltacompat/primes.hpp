#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace deltacompat {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs in
/// increasing order. Small primes are removed by trial division; the
/// remaining cofactor must fit in `max_bits` bits (at most 64), otherwise
/// CapacityError is thrown.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n,
                                                           unsigned max_bits = 64);

}  // namespace deltacompat
