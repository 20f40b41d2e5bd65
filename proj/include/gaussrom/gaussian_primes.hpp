#pragma once

// Prime elements and prime ideals of Z[i].

#include "gaussrom/gint.hpp"

#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace gaussrom {

/// A prime ideal of Z[i] given by its canonical generator.
struct PrimeRecord {
  GInt generator;
  mpz_class norm;
  int degree = 1;  // 1: norm is a rational prime (split or ramified); 2: inert

  friend bool operator==(const PrimeRecord& a, const PrimeRecord& b) { return a.generator == b.generator; }
};

/// Orders by norm, then by the components of the generator.
struct PrimeOrder {
  bool operator()(const PrimeRecord& a, const PrimeRecord& b) const { return NormOrder{}(a.generator, b.generator); }
};

/// Arithmetic invariants of Q(i).
struct FieldParams {
  static constexpr int n = 2;
  static constexpr int r1 = 0;
  static constexpr int r2 = 1;
  static constexpr int omega = 4;
  static constexpr int class_number = 1;
  static constexpr double regulator = 1.0;
  static constexpr double rho = std::numbers::pi / 4.0;
  static constexpr int discriminant = -4;
};

/// True iff z generates a prime ideal. Throws nothing; zero and units are not prime.
bool is_prime_element(const GInt& z);

/// Builds the record for a prime element (canonicalising the generator).
/// Throws std::invalid_argument if z is not prime.
PrimeRecord make_prime_record(const GInt& z);

/// Calls fn for every prime element z with norm(z) <= floor(x^2), ordered by
/// norm, then re, then im. Each associate is visited separately.
void for_each_prime_in_disk(double x, const std::function<void(const GInt&)>& fn);

/// Same enumeration with machine-word components; the fast path for scans.
void for_each_prime_in_disk_i64(double x, const std::function<void(std::int64_t, std::int64_t)>& fn);

std::vector<GInt> primes_in_disk(double x);

/// Count of prime elements with norm <= floor(x^2), computed from the rational
/// sieve without materialising the elements.
std::uint64_t count_primes_in_disk(double x);

/// Canonical generators of all prime ideals with norm <= bound, sorted by norm.
std::vector<PrimeRecord> prime_ideals_up_to(std::uint64_t bound);

/// count_primes_in_disk(x) * log(x) / (2 x^2); tends to 1.
double mitsui_ratio(double x);

/// floor(x^2) for a nonnegative real radius; the integer norm bound used by
/// every "house <= x" predicate.
std::uint64_t norm_bound(double x);

}  // namespace gaussrom
