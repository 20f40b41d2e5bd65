#pragma once

// Multiplicative order of 1+i modulo Gaussian primes, and factorizations of
// (1+i)^e - 1 organised by cyclotomic pieces.

#include "gaussrom/factor.hpp"
#include "gaussrom/factor_cache.hpp"
#include "gaussrom/gaussian_primes.hpp"
#include "gaussrom/gint.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace gaussrom {

/// (1+i)^e - 1.
GInt power_minus_one(unsigned long e);

/// The cyclotomic value Phi_d(1+i) = prod_{k | d} ((1+i)^k - 1)^{mu(d/k)}.
GInt cyclotomic_value(unsigned long d);

struct GaussianFactor {
  PrimeRecord prime;
  unsigned multiplicity = 0;
};

struct GaussianFactorization {
  std::vector<GaussianFactor> factors;  // sorted by PrimeOrder
  GInt unit{1, 0};                      // meaningful only when complete
  GInt cofactor{1, 0};                  // unfactored part
  bool complete = true;
};

/// Canonical prime divisors of z != 0 with multiplicities, from a
/// factorization of norm(z). When complete,
/// z == unit * prod prime^multiplicity. Throws std::domain_error for z == 0.
GaussianFactorization gaussian_prime_divisors(const GInt& z, const Effort& effort = {});

/// z == unit * prod p^m for the factorization's entries.
GInt reconstruct(const GaussianFactorization& f);

/// Order of 1+i in (Z[i]/p)^*, found by factoring the group order (norm - 1)
/// and descending through its prime factors. Throws std::domain_error for
/// associates of 1+i, std::runtime_error if the group order cannot be factored
/// within the budget.
mpz_class ord_one_plus_i(const PrimeRecord& p, const Effort& effort = {});

/// Order of 1+i modulo p, given any positive multiple of it.
unsigned long order_dividing(const PrimeRecord& p, unsigned long multiple);

struct OrderRecord {
  PrimeRecord prime;
  unsigned long order = 0;
};

struct OrderSet {
  std::vector<PrimeRecord> primes;  // sorted by PrimeOrder
  bool complete = true;
};

/// Memoised factorizations of Phi_d(1+i) and of (1+i)^e - 1.
///
/// Thread-safe. Concurrent callers may duplicate work for the same exponent
/// but always store identical results.
class OrderTable {
 public:
  explicit OrderTable(Effort effort = {}, FactorCache* cache = nullptr);

  /// Factorization of Phi_d(1+i), each prime tagged with its exact order.
  struct CyclotomicEntry {
    unsigned long d = 0;
    GInt value;
    GaussianFactorization factorization;
    std::vector<OrderRecord> orders;
  };

  CyclotomicEntry cyclotomic(unsigned long d);

  /// Prime ideals coprime to 1+i with order exactly e. Every such prime
  /// divides Phi_e(1+i); primes of smaller order dividing Phi_e(1+i) are
  /// filtered out and noted.
  OrderSet primes_of_order(unsigned long e);

  /// Complete multiset of prime divisors of (1+i)^e - 1, assembled from the
  /// cyclotomic pieces, or read from the cache when present.
  GaussianFactorization factor_power_minus_one(unsigned long e);

  /// Factors every Phi_d(1+i), d <= e_max, using up to `threads` workers.
  void prefetch(unsigned long e_max, unsigned threads);

  /// Diagnostics: primes that divide more than one cyclotomic value.
  std::vector<std::string> notes() const;

  const Effort& effort() const { return effort_; }

 private:
  Effort effort_;
  FactorCache* cache_;
  mutable std::mutex mutex_;
  std::map<unsigned long, CyclotomicEntry> cyclotomic_;
  std::map<unsigned long, GaussianFactorization> powers_;
  std::vector<std::string> notes_;
};

/// Convenience wrapper around a throwaway OrderTable.
OrderSet primes_of_order(unsigned long e, const Effort& effort = {});

/// Möbius function of a small positive integer.
int moebius(unsigned long n);

std::vector<unsigned long> divisors(unsigned long n);

/// Distinct prime factors of a small positive integer.
std::vector<unsigned long> prime_factors(unsigned long n);

}  // namespace gaussrom
