#pragma once

// Representations zeta = pi + (1+i)^k and the density scans built on them.

#include "gaussrom/gint.hpp"

#include <cstdint>
#include <vector>

namespace gaussrom {

/// Largest k with house((1+i)^k) <= sqrt(x)/2, i.e. 4 * 2^k <= x; 0 if none.
unsigned l_max(double x);

/// Number of pairs (pi, k) with pi prime, norm(pi) <= x^2, k_min <= k <= l_max(x)
/// and zeta == pi + (1+i)^k. k_min is 1, or 0 with include_k0.
/// Throws std::domain_error for x < 4.
unsigned long r_x(const GInt& zeta, double x, bool include_k0 = false);

struct ScanOptions {
  bool include_k0 = false;
  unsigned threads = 1;
};

/// Sums over every zeta with house(zeta) <= x.
struct DensityReport {
  double x = 0;
  unsigned l_max = 0;
  std::uint64_t sum_r = 0;
  std::uint64_t sum_r2 = 0;
  std::uint64_t sum_eta = 0;
  std::uint64_t lattice = 0;
  double eta_density = 0;  // sum_eta / lattice
  double cs_bound = 0;     // sum_r^2 / (sum_r2 * lattice)
  /// Represented zeta of even norm; only pi associate to 1+i can produce them.
  std::uint64_t even_norm_represented = 0;
  /// Representations with k >= 2 and pi not associate to 1+i whose zeta had
  /// even norm. Always zero.
  std::uint64_t parity_violations = 0;

  /// sum_eta * sum_r2 >= sum_r^2, evaluated exactly.
  bool cauchy_schwarz_holds() const;
};

/// Forward generation: marks pi + (1+i)^k for every prime in the disk.
/// Counts are independent of the thread count. Throws std::domain_error for x < 16.
DensityReport density_scan(double x, const ScanOptions& options = {});

struct RepresentationCount {
  std::int64_t re = 0;
  std::int64_t im = 0;
  unsigned count = 0;
};

/// Every zeta with house(zeta) <= x and a nonzero forward-generated count,
/// ordered by (re, im). Throws std::domain_error for x < 4.
std::vector<RepresentationCount> forward_representations(double x, const ScanOptions& options = {});

/// Evaluates r_x separately at every lattice point of the disk. Quadratic;
/// the cross-check for density_scan on small radii.
DensityReport density_scan_per_point(double x, const ScanOptions& options = {});

/// Ordered pairs (pi1, pi2) of primes with norm <= x^2 and pi1 - pi2 == zeta;
/// `distinct` excludes pi1 == pi2. Throws std::invalid_argument unless
/// house(zeta) <= sqrt(x).
std::uint64_t prime_pair_count(const GInt& zeta, double x, bool distinct);

/// The sieve constant the pair counts are compared against.
inline constexpr double kSieveConstant = 416.27;

struct SieveSample {
  GInt zeta;
  std::uint64_t pairs = 0;
  double ratio = 0;  // pairs * log^2 x / x^2
  bool within = false;
};

struct SieveReport {
  double x = 0;
  std::vector<SieveSample> samples;
  bool all_within() const;
};

/// (1+i)^j - (1+i)^i for 1 <= i < j <= l_max(x).
std::vector<GInt> power_difference_samples(double x);

/// Compares each sample's distinct-pair count against kSieveConstant x^2/log^2 x.
/// Exceedances are reported, not thrown.
SieveReport sieve_bound_check(double x, const std::vector<GInt>& samples);

}  // namespace gaussrom
