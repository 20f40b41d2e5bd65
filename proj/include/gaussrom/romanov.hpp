#pragma once

// Exact evaluation of the Romanov series over squarefree ideals of Z[i]
// coprime to 1+i, weighted by the multiplicative order of 1+i, together with
// the closed-form pieces of the tail estimate.
//
// Notation used below, for an exponent e >= 1:
//   F(e) = sum of 1/N(a) over squarefree a coprime to 1+i with ord(a) | e
//        = prod over primes p with ord(p) | e of (1 + 1/N(p))
//   G(e) = the same sum restricted to ord(a) == e
//        = sum over d | e of mu(e/d) F(d)
// The unit ideal has order 1 and norm 1, so F(1) = G(1) = 1.

#include "gaussrom/orders.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussrom {

/// Raised when an exact value is requested but some factorization it depends
/// on is incomplete.
class IncompleteFactorization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F(e). Throws IncompleteFactorization rather than return a lower bound.
mpq_class mass_order_divides(OrderTable& table, unsigned long e);

/// G(e), via Möbius inversion of F.
mpq_class mass_order_exactly(OrderTable& table, unsigned long e);

/// G(e) by enumerating every subset of the primes whose order divides e and
/// keeping those whose orders have lcm exactly e. Independent of the Möbius
/// route; exponential, so limited to 24 candidate primes.
mpq_class mass_order_exactly_by_subsets(OrderTable& table, unsigned long e);

/// sum_{e <= E} G(e)/e. Exact; throws IncompleteFactorization.
mpq_class romanov_partial_sum(OrderTable& table, unsigned long e_max);

/// sum_{k <= x} G(k). Exact; throws IncompleteFactorization.
mpq_class cumulative_mass(OrderTable& table, unsigned long x);

struct LedgerEntry {
  unsigned long e = 0;
  mpq_class mass_divides;  // F(e)
  mpq_class mass_exact;    // G(e)
  mpq_class partial_sum;   // sum_{k <= e} G(k)/k
  mpq_class cumulative;    // sum_{k <= e} G(k)
  bool complete = true;    // every factorization up to e was complete
};

/// Per-exponent record of the series. Entries past the first incomplete
/// factorization are certified lower bounds: every omitted prime only adds
/// nonnegative mass.
struct SumLedger {
  std::vector<LedgerEntry> entries;  // entries[k].e == k + 1

  bool complete() const { return entries.empty() || entries.back().complete; }
};

/// Builds entries 1..e_max. With allow_incomplete == false, throws
/// IncompleteFactorization instead of producing lower bounds.
SumLedger build_ledger(OrderTable& table, unsigned long e_max, bool allow_incomplete = false, unsigned threads = 1);

/// CSV with header e,F_num,F_den,G_num,G_den,partial_S_num,partial_S_den,complete.
std::string ledger_csv(const SumLedger& ledger);

struct DistinctPrimeCount {
  std::size_t count = 0;
  bool complete = true;
  std::vector<PrimeRecord> primes;
};

/// Distinct Gaussian prime divisors of prod_{k = ceil(x/2)}^{x} ((1+i)^k - 1).
DistinctPrimeCount distinct_prime_factor_count(OrderTable& table, unsigned long x);

/// The n-th odd rational prime (n = 1 gives 3).
std::uint64_t nth_odd_prime(std::uint64_t n);

/// -E(x0)/x0 + scale * integral_{x0}^{inf} (a log^2 t + b log t + c)/t^2 dt,
/// integrated in closed form. Throws std::domain_error for x0 <= 1.
double tail_bound_assembly(double x0, double mass_at_x0, double a, double b, double c, double scale);

/// prod_{3 <= p <= x} (1 - 1/p)^-1 divided by 0.922913686 log x.
/// Throws std::domain_error for x < 74.
double mertens_odd_product_check(double x);

/// prod_{i <= count} (1 - 1/p_i^2)^2 over the first `count` odd primes.
double odd_prime_square_product(std::size_t count);

}  // namespace gaussrom
