#pragma once

// Rational prime utilities: sieving, primality, sum of two squares.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace gaussrom {

/// All primes <= n (plain Eratosthenes, intended for n up to ~1e8).
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Calls fn(p) for every prime p in [lo, hi], in increasing order. Memory is
/// O(sqrt(hi) + segment) regardless of the interval length.
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& fn);

/// Calls fn(segment_lo, primes) for consecutive segments covering [lo, hi].
/// Each batch holds the primes of [segment_lo, segment_lo + segment_size).
void for_each_prime_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size,
                            const std::function<void(std::uint64_t, const std::vector<std::uint64_t>&)>& fn);

/// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

bool is_prime_u64(std::uint64_t n);

/// Miller-Rabin. With the first thirteen prime bases this is exact below
/// 3.3e24 (about 2^81); larger inputs additionally get 64 seeded random-base
/// rounds, so a composite passes with probability below 4^-64.
bool is_prime(const mpz_class& n);

/// For a prime p == 1 mod 4, returns (a, b) with a > b > 0 and a^2 + b^2 == p.
/// Throws std::invalid_argument otherwise.
std::pair<mpz_class, mpz_class> two_squares(const mpz_class& p);

}  // namespace gaussrom
