#pragma once

// Rational integer factorization with an explicit work budget.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace gaussrom {

/// Work budget for the probabilistic stages. Counted in modular
/// multiplications, never wall-clock time, so results are reproducible.
struct Effort {
  std::uint64_t rho_iterations = 4'000'000;  // per composite, summed over restarts
  std::uint64_t pm1_bound = 200'000;         // stage-1 smoothness bound B1

  /// The default budget multiplied by `level` (the command-line --effort).
  /// Throws std::invalid_argument for level 0.
  static Effort scaled(std::uint64_t level);
};

struct RationalFactorization {
  std::vector<mpz_class> primes;  // ascending, with multiplicity
  mpz_class cofactor = 1;         // unfactored composite part (1 when complete)
  bool complete = true;
};

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

/// Trial division to 1e6, then Brent-Pollard rho and Pollard p-1 within the
/// budget. product(primes) * cofactor == N always holds; complete is false
/// iff a composite cofactor remains. Throws std::domain_error for N < 1.
RationalFactorization factor_norm(const mpz_class& n, const Effort& effort = {});

/// Distinct prime divisors of a complete factorization.
std::vector<mpz_class> distinct(const std::vector<mpz_class>& primes);

}  // namespace gaussrom
