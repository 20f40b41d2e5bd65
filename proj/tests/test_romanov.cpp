#include "gaussrom/romanov.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

using namespace gaussrom;

namespace {

const GInt kOne{1, 0};

struct Candidate {
  GInt generator;
  mpz_class norm;
  unsigned long order;
};

// Every prime ideal dividing (1+i)^e - 1 for e <= e_max, with its order found
// by stepping through powers of 1+i.
std::vector<Candidate> stepping_candidates(unsigned long e_max) {
  mpz_class bound = 0;
  for (unsigned long e = 1; e <= e_max; ++e) bound = std::max(bound, norm(pow(kOnePlusI, e) - kOne));
  std::vector<Candidate> out;
  for (const auto& p : prime_ideals_up_to(bound.get_ui())) {
    if (p.norm == 2) continue;
    GInt power = kOnePlusI;
    for (unsigned long k = 1; k <= e_max; ++k) {
      if (congruent(power, kOne, p.generator)) {
        out.push_back({p.generator, p.norm, k});
        break;
      }
      power = divrem(power * kOnePlusI, p.generator).remainder;
    }
  }
  return out;
}

// Sum of 1/N(a) over squarefree a built from candidates with lcm of orders == e.
mpq_class subset_oracle(const std::vector<Candidate>& all, unsigned long e) {
  std::vector<Candidate> pool;
  for (const auto& c : all) {
    if (e % c.order == 0) pool.push_back(c);
  }
  mpq_class total = 0;
  for (unsigned long mask = 0; mask < (1UL << pool.size()); ++mask) {
    unsigned long l = 1;
    mpz_class n = 1;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (mask >> k & 1) {
        l = std::lcm(l, pool[k].order);
        n *= pool[k].norm;
      }
    }
    if (l == e) total += mpq_class(1, n);
  }
  return total;
}

mpq_class q(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Romanov, MassExamples) {
  OrderTable table;
  EXPECT_EQ(mass_order_divides(table, 1), 1);
  EXPECT_EQ(mass_order_divides(table, 2), q(6, 5));
  EXPECT_EQ(mass_order_divides(table, 4), q(36, 25));
  EXPECT_EQ(mass_order_exactly(table, 1), 1);
  EXPECT_EQ(mass_order_exactly(table, 2), q(1, 5));
  EXPECT_EQ(mass_order_exactly(table, 3), q(1, 13));
  EXPECT_EQ(mass_order_exactly(table, 4), q(6, 25));
  EXPECT_EQ(mass_order_exactly_by_subsets(table, 1), 1);
  EXPECT_EQ(mass_order_exactly_by_subsets(table, 2), q(1, 5));
  EXPECT_EQ(mass_order_exactly_by_subsets(table, 4), q(6, 25));
}

TEST(Romanov, PartialSumExamples) {
  OrderTable table;
  EXPECT_EQ(romanov_partial_sum(table, 1), 1);
  EXPECT_EQ(romanov_partial_sum(table, 2), q(11, 10));
  EXPECT_EQ(romanov_partial_sum(table, 4), q(1156, 975));
  EXPECT_EQ(cumulative_mass(table, 1), 1);
  EXPECT_EQ(cumulative_mass(table, 2), q(6, 5));
}

TEST(Romanov, MoebiusRouteMatchesSubsetEnumeration) {
  OrderTable table;
  for (unsigned long e = 1; e <= 24; ++e) {
    EXPECT_EQ(mass_order_exactly(table, e), mass_order_exactly_by_subsets(table, e)) << e;
  }
}

TEST(Romanov, MassMatchesSteppingOracle) {
  const unsigned long e_max = 16;
  const std::vector<Candidate> candidates = stepping_candidates(e_max);
  OrderTable table;
  for (unsigned long e = 1; e <= e_max; ++e) {
    EXPECT_EQ(mass_order_exactly(table, e), subset_oracle(candidates, e)) << e;
  }
}

TEST(Romanov, MoebiusPairIdentity) {
  OrderTable table;
  for (unsigned long e = 1; e <= 72; ++e) {
    mpq_class sum = 0;
    for (unsigned long d : divisors(e)) sum += mass_order_exactly(table, d);
    EXPECT_EQ(sum, mass_order_divides(table, e)) << e;
  }
}

TEST(Romanov, LedgerIsMonotoneAndBelowHeadBound) {
  OrderTable table;
  SumLedger ledger = build_ledger(table, 72);
  ASSERT_EQ(ledger.entries.size(), 72u);
  ASSERT_TRUE(ledger.complete());
  const mpq_class bound(127095, 100000);
  mpq_class previous_s = 0, previous_e = 0;
  for (const auto& entry : ledger.entries) {
    EXPECT_GE(entry.mass_exact, 0);
    EXPECT_GE(entry.partial_sum, previous_s);
    EXPECT_GE(entry.cumulative, previous_e);
    EXPECT_LE(entry.partial_sum, bound);
    previous_s = entry.partial_sum;
    previous_e = entry.cumulative;
  }
  EXPECT_EQ(ledger.entries[3].partial_sum, q(1156, 975));
  EXPECT_NEAR(ledger.entries.back().partial_sum.get_d(), 1.2666844, 1e-6);
}

TEST(Romanov, LedgerThreadsAgree) {
  OrderTable serial, threaded;
  SumLedger a = build_ledger(serial, 48, false, 1);
  SumLedger b = build_ledger(threaded, 48, false, 3);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    EXPECT_EQ(a.entries[k].partial_sum, b.entries[k].partial_sum);
    EXPECT_EQ(a.entries[k].cumulative, b.entries[k].cumulative);
  }
}

TEST(Romanov, CumulativeMassGrowsLikeLogSquared) {
  OrderTable table;
  for (unsigned long x = 8; x <= 72; x += 8) {
    const double l = std::log(static_cast<double>(x));
    EXPECT_LE(cumulative_mass(table, x).get_d(), 4 * l * l) << x;
  }
}

TEST(Romanov, IncompleteFactorizationIsRefused) {
  Effort tiny;
  tiny.rho_iterations = 1;
  tiny.pm1_bound = 1;
  OrderTable table(tiny);
  EXPECT_THROW(romanov_partial_sum(table, 60), IncompleteFactorization);
  OrderTable fresh(tiny);
  SumLedger ledger = build_ledger(fresh, 60, true);
  EXPECT_FALSE(ledger.complete());
  OrderTable full;
  SumLedger exact = build_ledger(full, 60);
  for (std::size_t k = 0; k < 60; ++k) {
    // Incomplete entries are lower bounds for the exact values.
    EXPECT_LE(ledger.entries[k].partial_sum, exact.entries[k].partial_sum);
    if (ledger.entries[k].complete) {
      EXPECT_EQ(ledger.entries[k].partial_sum, exact.entries[k].partial_sum);
    }
  }
}

TEST(Romanov, LedgerCsv) {
  OrderTable table;
  std::string csv = ledger_csv(build_ledger(table, 4));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "e,F_num,F_den,G_num,G_den,partial_S_num,partial_S_den,complete");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "1,1,1,1,1,1,1,1");
  EXPECT_EQ(rows[1], "2,6,5,1,5,11,10,1");
  EXPECT_EQ(rows[3].substr(rows[3].size() - 10), "1156,975,1");
}

TEST(Romanov, DistinctPrimeCountExamples) {
  OrderTable table;
  DistinctPrimeCount four = distinct_prime_factor_count(table, 4);
  EXPECT_EQ(four.count, 3u);
  EXPECT_TRUE(four.complete);
  DistinctPrimeCount eight = distinct_prime_factor_count(table, 8);
  EXPECT_EQ(eight.count, 6u);
  std::set<GInt, NormOrder> got;
  for (const auto& p : eight.primes) {
    got.insert(p.generator);
    EXPECT_EQ(p.norm % 2, 1);
  }
  EXPECT_EQ(got, (std::set<GInt, NormOrder>{GInt(2, 1), GInt(2, 3), GInt(1, 2), GInt(5, 4), GInt(8, 7), GInt(3, 0)}));
}

TEST(Romanov, DistinctPrimeCountMatchesDirectFactorization) {
  OrderTable table;
  for (unsigned long x = 2; x <= 40; ++x) {
    std::set<GInt, NormOrder> oracle;
    for (unsigned long k = (x + 1) / 2; k <= x; ++k) {
      for (const auto& f : gaussian_prime_divisors(power_minus_one(k)).factors) oracle.insert(f.prime.generator);
    }
    DistinctPrimeCount got = distinct_prime_factor_count(table, x);
    EXPECT_EQ(got.count, oracle.size()) << x;
  }
}

TEST(Romanov, NthOddPrime) {
  EXPECT_EQ(nth_odd_prime(1), 3u);
  EXPECT_EQ(nth_odd_prime(2), 5u);
  EXPECT_EQ(nth_odd_prime(209), 1291u);
  EXPECT_THROW(nth_odd_prime(0), std::domain_error);
}

TEST(Romanov, TailBoundAssembly) {
  EXPECT_NEAR(tail_bound_assembly(200, 3.33018, 3.997993, -7.503313, 3.5206, 0.999749), 0.57749, 2e-5);
  EXPECT_DOUBLE_EQ(tail_bound_assembly(200, 0, 0, 0, 0, 1), 0.0);
  EXPECT_DOUBLE_EQ(tail_bound_assembly(2, 0, 0, 0, 1, 1), 0.5);
  EXPECT_THROW(tail_bound_assembly(1, 0, 0, 0, 1, 1), std::domain_error);
  // More known mass at x0 can only lower the tail.
  EXPECT_LT(tail_bound_assembly(200, 3.4, 3.997993, -7.503313, 3.5206, 0.999749),
            tail_bound_assembly(200, 3.33018, 3.997993, -7.503313, 3.5206, 0.999749));
}

TEST(Romanov, MertensOddProduct) {
  for (double x : {74.0, 100.0, 1000.0, 1e4, 1e6}) {
    double r = mertens_odd_product_check(x);
    EXPECT_GT(r, 0) << x;
    EXPECT_LE(r, 1) << x;
  }
  EXPECT_GT(mertens_odd_product_check(1e6), 0.9);
  EXPECT_THROW(mertens_odd_product_check(73), std::domain_error);
}

TEST(Romanov, OddPrimeSquareProduct) {
  EXPECT_DOUBLE_EQ(odd_prime_square_product(0), 1.0);
  EXPECT_NEAR(odd_prime_square_product(1), std::pow(8.0 / 9.0, 2), 1e-15);
  // prod over all odd p of (1 - 1/p^2) is (6/pi^2) / (3/4) = 8/pi^2.
  const double limit = std::pow(8.0 / (M_PI * M_PI), 2);
  EXPECT_NEAR(odd_prime_square_product(209), limit, 2e-3);
  EXPECT_GT(odd_prime_square_product(209), limit);
}
