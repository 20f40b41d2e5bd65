#include "gaussrom/density.hpp"
#include "gaussrom/gaussian_primes.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace gaussrom;

namespace {

bool rational_prime(long n) {
  n = std::labs(n);
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool oracle_prime_element(long a, long b) {
  if (a == 0) return rational_prime(b) && std::labs(b) % 4 == 3;
  if (b == 0) return rational_prime(a) && std::labs(a) % 4 == 3;
  return rational_prime(a * a + b * b);
}

// r_x straight from the definition: try every k and test zeta - (1+i)^k.
unsigned long oracle_r(long re, long im, long x, unsigned k_min) {
  unsigned long count = 0;
  long pr = 1, pi = 0;  // (1+i)^k
  for (unsigned k = 0; 4L << k <= x; ++k) {
    if (k >= k_min) {
      const long a = re - pr, b = im - pi;
      if (a * a + b * b <= x * x && oracle_prime_element(a, b)) ++count;
    }
    const long next_re = pr - pi, next_im = pr + pi;
    pr = next_re;
    pi = next_im;
  }
  return count;
}

}  // namespace

TEST(Density, LMaxExamples) {
  EXPECT_EQ(l_max(64), 4u);
  EXPECT_EQ(l_max(4), 0u);
  EXPECT_EQ(l_max(16), 2u);
  EXPECT_EQ(l_max(63.9), 3u);
  EXPECT_EQ(l_max(3), 0u);
  for (unsigned k = 0; k < 40; ++k) EXPECT_EQ(l_max(std::ldexp(4.0, static_cast<int>(k))), k);
}

TEST(Density, RxExamples) {
  EXPECT_EQ(r_x(GInt(3, 2), 64), 3u);
  EXPECT_EQ(r_x(GInt(1, 0), 64), 2u);
  EXPECT_EQ(r_x(GInt(0, 0), 64), 1u);
  EXPECT_THROW(r_x(GInt(0, 0), 3.9), std::domain_error);
}

TEST(Density, RxMatchesDefinition) {
  for (long x : {16L, 40L, 64L}) {
    for (long a = -x; a <= x; ++a) {
      for (long b = -x; b <= x; ++b) {
        if (a * a + b * b > x * x) continue;
        ASSERT_EQ(r_x(GInt(a, b), static_cast<double>(x)), oracle_r(a, b, x, 1)) << a << ' ' << b << ' ' << x;
        ASSERT_EQ(r_x(GInt(a, b), static_cast<double>(x), true), oracle_r(a, b, x, 0));
      }
    }
  }
}

TEST(Density, ForwardRepresentationsMatchDefinition) {
  for (long x : {16L, 33L, 64L}) {
    std::map<std::pair<long, long>, unsigned long> forward;
    for (const auto& r : forward_representations(static_cast<double>(x))) {
      EXPECT_GT(r.count, 0u);
      forward[{r.re, r.im}] = r.count;
    }
    std::size_t represented = 0;
    for (long a = -x; a <= x; ++a) {
      for (long b = -x; b <= x; ++b) {
        if (a * a + b * b > x * x) continue;
        unsigned long expected = oracle_r(a, b, x, 1);
        auto it = forward.find({a, b});
        ASSERT_EQ(it == forward.end() ? 0 : it->second, expected) << a << ' ' << b << ' ' << x;
        represented += expected > 0;
      }
    }
    EXPECT_EQ(represented, forward.size());
  }
}

TEST(Density, ForwardScanMatchesPerPointScan) {
  for (double x : {16.0, 25.5, 64.0, 100.0}) {
    for (bool k0 : {false, true}) {
      ScanOptions opts;
      opts.include_k0 = k0;
      DensityReport forward = density_scan(x, opts);
      DensityReport per_point = density_scan_per_point(x, opts);
      EXPECT_EQ(forward.sum_r, per_point.sum_r) << x;
      EXPECT_EQ(forward.sum_r2, per_point.sum_r2) << x;
      EXPECT_EQ(forward.sum_eta, per_point.sum_eta) << x;
      EXPECT_EQ(forward.lattice, per_point.lattice) << x;
      EXPECT_EQ(forward.l_max, per_point.l_max);
    }
  }
}

TEST(Density, SumOfRepresentationsByDoubleCounting) {
  // Each prime pi contributes one representation per k whose zeta stays in the disk.
  for (long x : {16L, 50L, 128L}) {
    std::uint64_t expected = 0;
    const unsigned top = l_max(static_cast<double>(x));
    for (long a = -x; a <= x; ++a) {
      for (long b = -x; b <= x; ++b) {
        if (a * a + b * b > x * x || !oracle_prime_element(a, b)) continue;
        long pr = 1, pi = 0;
        for (unsigned k = 0; k <= top; ++k) {
          if (k >= 1) {
            const long zr = a + pr, zi = b + pi;
            expected += zr * zr + zi * zi <= x * x;
          }
          const long next_re = pr - pi, next_im = pr + pi;
          pr = next_re;
          pi = next_im;
        }
      }
    }
    EXPECT_EQ(density_scan(static_cast<double>(x)).sum_r, expected) << x;
  }
}

TEST(Density, ScanInvariants) {
  for (double x : {16.0, 100.0, 300.0}) {
    DensityReport r = density_scan(x);
    EXPECT_TRUE(r.cauchy_schwarz_holds());
    EXPECT_GE(r.sum_r2, r.sum_r);
    EXPECT_LE(r.sum_eta, r.sum_r);
    EXPECT_LE(r.sum_eta, r.lattice);
    EXPECT_EQ(r.parity_violations, 0u);
    EXPECT_LE(r.even_norm_represented, 8 * (r.l_max + 1) * static_cast<std::uint64_t>(x));
    EXPECT_NEAR(r.eta_density, static_cast<double>(r.sum_eta) / r.lattice, 1e-15);
    EXPECT_LE(r.cs_bound, r.eta_density + 1e-12);
  }
}

TEST(Density, EtaDensityCorridor) {
  DensityReport r = density_scan(100);
  EXPECT_GE(r.eta_density, 0.00110183);
  EXPECT_LE(r.eta_density, 0.55);
}

TEST(Density, ThreadCountIndependence) {
  ScanOptions one, four;
  four.threads = 4;
  DensityReport a = density_scan(400, one), b = density_scan(400, four);
  EXPECT_EQ(a.sum_r, b.sum_r);
  EXPECT_EQ(a.sum_r2, b.sum_r2);
  EXPECT_EQ(a.sum_eta, b.sum_eta);
  EXPECT_EQ(a.even_norm_represented, b.even_norm_represented);
}

TEST(Density, KnownScanAt500) {
  DensityReport r = density_scan(500);
  EXPECT_EQ(r.sum_r, 526473u);
  EXPECT_EQ(r.sum_r2, 1132575u);
  EXPECT_EQ(r.sum_eta, 303547u);
  EXPECT_TRUE(r.cauchy_schwarz_holds());
  // About 2x^2/log x primes, each with about log x/log 2 powers: sum_r/x^2 tends to 2/log 2.
  const double normalised = static_cast<double>(r.sum_r) / (500.0 * 500.0);
  EXPECT_GE(normalised, 1.5);
  EXPECT_LE(normalised, 4.5);
}

TEST(Density, ScanRejectsSmallRadius) {
  EXPECT_THROW(density_scan(15.9), std::domain_error);
  EXPECT_THROW(forward_representations(3), std::domain_error);
}

TEST(PrimePairs, Examples) {
  EXPECT_EQ(prime_pair_count(GInt(0, 0), 3, true), 0u);
  EXPECT_EQ(prime_pair_count(GInt(0, 0), 3, false), 16u);
  // house(2i) = 2 exceeds sqrt(3).
  EXPECT_THROW(prime_pair_count(GInt(0, 2), 3, true), std::invalid_argument);
  EXPECT_THROW(prime_pair_count(GInt(2, 2), 7.9, true), std::invalid_argument);
}

TEST(PrimePairs, MatchesExhaustivePairSearch) {
  const long x = 12;
  std::vector<std::pair<long, long>> primes;
  for (long a = -x; a <= x; ++a) {
    for (long b = -x; b <= x; ++b) {
      if (a * a + b * b <= x * x && oracle_prime_element(a, b)) primes.emplace_back(a, b);
    }
  }
  for (long zr = -3; zr <= 3; ++zr) {
    for (long zi = -3; zi <= 3; ++zi) {
      if (zr * zr + zi * zi > x) continue;
      std::uint64_t pairs = 0;
      for (const auto& p : primes) {
        for (const auto& q : primes) pairs += p.first - q.first == zr && p.second - q.second == zi;
      }
      EXPECT_EQ(prime_pair_count(GInt(zr, zi), static_cast<double>(x), false), pairs) << zr << ' ' << zi;
      const std::uint64_t diagonal = zr == 0 && zi == 0 ? primes.size() : 0;
      EXPECT_EQ(prime_pair_count(GInt(zr, zi), static_cast<double>(x), true), pairs - diagonal);
    }
  }
}

TEST(Sieve, PowerDifferenceSamples) {
  std::vector<GInt> s = power_difference_samples(64);  // l_max = 4
  EXPECT_EQ(s.size(), 6u);
  for (const GInt& z : s) EXPECT_EQ(norm(z) % 2, 0);
  EXPECT_TRUE(power_difference_samples(8).empty());
}

TEST(Sieve, SamplesWithinConstant) {
  const double x = 200;
  SieveReport report = sieve_bound_check(x, power_difference_samples(x));
  ASSERT_FALSE(report.samples.empty());
  for (const auto& s : report.samples) {
    EXPECT_EQ(s.pairs, prime_pair_count(s.zeta, x, true));
    EXPECT_NEAR(s.ratio, s.pairs * std::pow(std::log(x), 2) / (x * x), 1e-12);
    EXPECT_EQ(s.within, s.ratio <= kSieveConstant);
  }
  EXPECT_TRUE(report.all_within());
}
