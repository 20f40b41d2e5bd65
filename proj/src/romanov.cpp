#include "gaussrom/romanov.hpp"

#include "gaussrom/rational_primes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace gaussrom {

namespace {

struct Mass {
  mpq_class value = 1;
  bool complete = true;
};

// prod over primes of exact order d of (1 + 1/N(p)).
Mass order_block(OrderTable& table, unsigned long d) {
  OrderSet set = table.primes_of_order(d);
  Mass m;
  m.complete = set.complete;
  for (const auto& p : set.primes) m.value *= mpq_class(p.norm + 1, p.norm);
  m.value.canonicalize();
  return m;
}

Mass mass_divides(OrderTable& table, unsigned long e) {
  Mass m;
  for (unsigned long d : divisors(e)) {
    Mass block = order_block(table, d);
    m.value *= block.value;
    m.complete = m.complete && block.complete;
  }
  return m;
}

Mass mass_exact(OrderTable& table, unsigned long e) {
  Mass m;
  m.value = 0;
  for (unsigned long d : divisors(e)) {
    int mu = moebius(e / d);
    if (mu == 0) continue;
    Mass f = mass_divides(table, d);
    m.value += mu * f.value;
    m.complete = m.complete && f.complete;
  }
  return m;
}

void require_complete(bool complete, const std::string& what, unsigned long e) {
  if (!complete) {
    throw IncompleteFactorization(what + ": factorization needed for e=" + std::to_string(e) +
                                  " is incomplete; raise the effort budget");
  }
}

}  // namespace

mpq_class mass_order_divides(OrderTable& table, unsigned long e) {
  if (e == 0) throw std::domain_error("exponent must be positive");
  Mass m = mass_divides(table, e);
  require_complete(m.complete, "mass_order_divides", e);
  return m.value;
}

mpq_class mass_order_exactly(OrderTable& table, unsigned long e) {
  if (e == 0) throw std::domain_error("exponent must be positive");
  Mass m = mass_exact(table, e);
  require_complete(m.complete, "mass_order_exactly", e);
  return m.value;
}

mpq_class mass_order_exactly_by_subsets(OrderTable& table, unsigned long e) {
  if (e == 0) throw std::domain_error("exponent must be positive");
  std::vector<std::pair<mpz_class, unsigned long>> candidates;  // norm, order
  for (unsigned long d : divisors(e)) {
    OrderSet set = table.primes_of_order(d);
    require_complete(set.complete, "mass_order_exactly_by_subsets", d);
    for (const auto& p : set.primes) candidates.emplace_back(p.norm, d);
  }
  if (candidates.size() > 24) throw std::length_error("subset enumeration limited to 24 primes");
  mpq_class total = 0;
  const std::size_t n = candidates.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    unsigned long l = 1;
    mpz_class denominator = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask >> k & 1)) continue;
      l = std::lcm(l, candidates[k].second);
      denominator *= candidates[k].first;
    }
    if (l == e) total += mpq_class(1, denominator);
  }
  total.canonicalize();
  return total;
}

SumLedger build_ledger(OrderTable& table, unsigned long e_max, bool allow_incomplete, unsigned threads) {
  table.prefetch(e_max, threads);
  std::vector<Mass> blocks(e_max + 1), divides(e_max + 1);
  SumLedger ledger;
  mpq_class partial = 0, cumulative = 0;
  bool all_complete = true;
  for (unsigned long e = 1; e <= e_max; ++e) {
    blocks[e] = order_block(table, e);
    Mass f;
    for (unsigned long d : divisors(e)) {
      f.value *= blocks[d].value;
      f.complete = f.complete && blocks[d].complete;
    }
    divides[e] = f;
    mpq_class g = 0;
    for (unsigned long d : divisors(e)) {
      if (int mu = moebius(e / d); mu != 0) g += mu * divides[d].value;
    }
    g.canonicalize();
    all_complete = all_complete && f.complete;
    if (!allow_incomplete) require_complete(all_complete, "build_ledger", e);
    partial += g / e;
    cumulative += g;
    partial.canonicalize();
    cumulative.canonicalize();
    ledger.entries.push_back({e, f.value, g, partial, cumulative, all_complete});
  }
  return ledger;
}

mpq_class romanov_partial_sum(OrderTable& table, unsigned long e_max) {
  if (e_max == 0) return 0;
  return build_ledger(table, e_max).entries.back().partial_sum;
}

mpq_class cumulative_mass(OrderTable& table, unsigned long x) {
  if (x == 0) return 0;
  return build_ledger(table, x).entries.back().cumulative;
}

std::string ledger_csv(const SumLedger& ledger) {
  std::ostringstream out;
  out << "e,F_num,F_den,G_num,G_den,partial_S_num,partial_S_den,complete\n";
  for (const auto& row : ledger.entries) {
    out << row.e << ',' << row.mass_divides.get_num() << ',' << row.mass_divides.get_den() << ','
        << row.mass_exact.get_num() << ',' << row.mass_exact.get_den() << ',' << row.partial_sum.get_num() << ','
        << row.partial_sum.get_den() << ',' << (row.complete ? 1 : 0) << '\n';
  }
  return out.str();
}

DistinctPrimeCount distinct_prime_factor_count(OrderTable& table, unsigned long x) {
  if (x < 2) throw std::domain_error("distinct_prime_factor_count: x must be >= 2");
  std::set<unsigned long> orders;
  for (unsigned long k = (x + 1) / 2; k <= x; ++k) {
    for (unsigned long d : divisors(k)) orders.insert(d);
  }
  DistinctPrimeCount out;
  for (unsigned long d : orders) {
    OrderSet set = table.primes_of_order(d);
    out.complete = out.complete && set.complete;
    out.primes.insert(out.primes.end(), set.primes.begin(), set.primes.end());
  }
  std::sort(out.primes.begin(), out.primes.end(), PrimeOrder{});
  out.count = out.primes.size();
  return out;
}

std::uint64_t nth_odd_prime(std::uint64_t n) {
  if (n == 0) throw std::domain_error("nth_odd_prime: n must be >= 1");
  // p_k < k (log k + log log k) for k >= 6; the n-th odd prime is p_{n+1}.
  double k = static_cast<double>(n + 1);
  auto bound = static_cast<std::uint64_t>(k < 6 ? 15 : k * (std::log(k) + std::log(std::log(k))) + 1);
  std::vector<std::uint64_t> primes = primes_up_to(bound);
  return primes.at(n);
}

double tail_bound_assembly(double x0, double mass_at_x0, double a, double b, double c, double scale) {
  if (!(x0 > 1)) throw std::domain_error("tail_bound_assembly: x0 must exceed 1");
  // integral_{x0}^{inf} log^2 t/t^2 = (log^2 x0 + 2 log x0 + 2)/x0
  // integral_{x0}^{inf} log t/t^2   = (log x0 + 1)/x0
  // integral_{x0}^{inf} 1/t^2       = 1/x0
  const double l = std::log(x0);
  const double integral = (a * (l * l + 2 * l + 2) + b * (l + 1) + c) / x0;
  return -mass_at_x0 / x0 + scale * integral;
}

double mertens_odd_product_check(double x) {
  if (!(x >= 74)) throw std::domain_error("mertens_odd_product_check: x must be >= 74");
  long double log_product = 0;
  for_each_prime(3, static_cast<std::uint64_t>(std::floor(x)), [&](std::uint64_t p) {
    log_product -= std::log1p(-1.0L / static_cast<long double>(p));
  });
  return static_cast<double>(std::exp(log_product) / (0.922913686L * std::log(static_cast<long double>(x))));
}

double odd_prime_square_product(std::size_t count) {
  long double product = 1;
  std::size_t taken = 0;
  for (std::uint64_t bound = 64; taken < count; bound *= 2) {
    taken = 0;
    product = 1;
    for (std::uint64_t p : primes_up_to(bound)) {
      if (p == 2) continue;
      if (taken == count) break;
      long double f = 1.0L - 1.0L / (static_cast<long double>(p) * p);
      product *= f * f;
      ++taken;
    }
  }
  return static_cast<double>(product);
}

}  // namespace gaussrom
