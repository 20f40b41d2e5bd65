#include "gaussrom/orders.hpp"

#include "gaussrom/rational_primes.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gaussrom {

namespace {

const GInt kOne{1, 0};

bool is_one_plus_i_associate(const PrimeRecord& p) { return p.norm == 2; }

}  // namespace

int moebius(unsigned long n) {
  if (n == 0) throw std::domain_error("moebius: n must be positive");
  int result = 1;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

GInt power_minus_one(unsigned long e) { return pow(kOnePlusI, e) - kOne; }

GInt cyclotomic_value(unsigned long d) {
  if (d == 0) throw std::domain_error("cyclotomic_value: d must be positive");
  GInt numerator = kOne;
  GInt denominator = kOne;
  for (unsigned long k : divisors(d)) {
    int mu = moebius(d / k);
    if (mu == 1) numerator *= power_minus_one(k);
    if (mu == -1) denominator *= power_minus_one(k);
  }
  return divide_exact(numerator, denominator);
}

GaussianFactorization gaussian_prime_divisors(const GInt& z, const Effort& effort) {
  if (z.is_zero()) throw std::domain_error("gaussian_prime_divisors: zero");
  RationalFactorization rf = factor_norm(norm(z), effort);
  GaussianFactorization out;
  GInt rest = z;
  auto strip = [&](const GInt& pi, unsigned count, int degree) {
    if (count == 0) return;
    rest = divide_exact(rest, pow(pi, count));
    out.factors.push_back({PrimeRecord{pi, norm(pi), degree}, count});
  };
  for (std::size_t k = 0; k < rf.primes.size();) {
    const mpz_class q = rf.primes[k];
    unsigned m = 0;
    while (k < rf.primes.size() && rf.primes[k] == q) {
      ++m;
      ++k;
    }
    if (q == 2) {
      strip(kOnePlusI, m, 1);
    } else if (q % 4 == 3) {
      if (m % 2 != 0) throw std::logic_error("odd power of an inert prime in a norm");
      strip(GInt(q, 0), m / 2, 2);
    } else {
      auto [a, b] = two_squares(q);
      GInt first(a, b), second(b, a);
      unsigned c = 0;
      while (c < m && divides(first, rest)) {
        rest = divide_exact(rest, first);
        ++c;
      }
      if (c > 0) out.factors.push_back({PrimeRecord{first, q, 1}, c});
      strip(second, m - c, 1);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const GaussianFactor& l, const GaussianFactor& r) { return PrimeOrder{}(l.prime, r.prime); });
  out.complete = rf.complete;
  if (out.complete) {
    if (!rest.is_unit()) throw std::logic_error("gaussian_prime_divisors: leftover " + rest.str() + " is not a unit");
    out.unit = rest;
  } else {
    out.cofactor = rest;
  }
  return out;
}

GInt reconstruct(const GaussianFactorization& f) {
  GInt acc = f.complete ? f.unit : f.cofactor;
  for (const auto& [prime, mult] : f.factors) acc *= pow(prime.generator, mult);
  return acc;
}

unsigned long order_dividing(const PrimeRecord& p, unsigned long multiple) {
  if (is_one_plus_i_associate(p)) throw std::domain_error("1+i has no multiplicative order modulo its own associates");
  if (multiple == 0 || !congruent(powmod(kOnePlusI, multiple, p.generator), kOne, p.generator)) {
    throw std::invalid_argument("order_dividing: " + std::to_string(multiple) + " is not a multiple of the order modulo " +
                                p.generator.str());
  }
  unsigned long ord = multiple;
  for (unsigned long q : prime_factors(multiple)) {
    while (ord % q == 0 && congruent(powmod(kOnePlusI, ord / q, p.generator), kOne, p.generator)) ord /= q;
  }
  return ord;
}

mpz_class ord_one_plus_i(const PrimeRecord& p, const Effort& effort) {
  if (is_one_plus_i_associate(p)) throw std::domain_error("1+i has no multiplicative order modulo its own associates");
  // |(Z[i]/p)^*| = norm(p) - 1 for split and inert primes alike.
  const mpz_class group = p.norm - 1;
  RationalFactorization rf = factor_norm(group, effort);
  if (!rf.complete) throw std::runtime_error("ord_one_plus_i: could not factor group order " + group.get_str());
  mpz_class ord = group;
  for (const mpz_class& q : distinct(rf.primes)) {
    while (mpz_divisible_p(ord.get_mpz_t(), q.get_mpz_t())) {
      mpz_class candidate = ord / q;
      if (!congruent(powmod(kOnePlusI, candidate, p.generator), kOne, p.generator)) break;
      ord = candidate;
    }
  }
  return ord;
}

OrderTable::OrderTable(Effort effort, FactorCache* cache) : effort_(effort), cache_(cache) {}

OrderTable::CyclotomicEntry OrderTable::cyclotomic(unsigned long d) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cyclotomic_.find(d); it != cyclotomic_.end()) return it->second;
  }
  CyclotomicEntry entry;
  entry.d = d;
  entry.value = cyclotomic_value(d);
  entry.factorization = gaussian_prime_divisors(entry.value, effort_);
  std::vector<std::string> fresh_notes;
  for (const auto& f : entry.factorization.factors) {
    unsigned long ord = order_dividing(f.prime, d);
    entry.orders.push_back({f.prime, ord});
    if (ord != d) {
      std::ostringstream note;
      note << "prime " << f.prime.generator << " (norm " << f.prime.norm << ") of order " << ord
           << " divides both Phi_" << ord << "(1+i) and Phi_" << d << "(1+i)";
      fresh_notes.push_back(note.str());
    }
  }
  std::lock_guard lock(mutex_);
  auto [it, inserted] = cyclotomic_.emplace(d, std::move(entry));
  if (inserted) notes_.insert(notes_.end(), fresh_notes.begin(), fresh_notes.end());
  return it->second;
}

OrderSet OrderTable::primes_of_order(unsigned long e) {
  if (e == 0) throw std::domain_error("primes_of_order: e must be positive");
  OrderSet out;
  std::optional<CacheRecord> cached = cache_ ? cache_->lookup(e) : std::nullopt;
  if (cached && cached->complete) {
    for (const auto& [g, mult] : cached->factors) {
      PrimeRecord p = make_prime_record(g);
      if (order_dividing(p, e) == e) out.primes.push_back(std::move(p));
    }
  } else {
    CyclotomicEntry entry = cyclotomic(e);
    for (const auto& rec : entry.orders) {
      if (rec.order == e) out.primes.push_back(rec.prime);
    }
    out.complete = entry.factorization.complete;
  }
  std::sort(out.primes.begin(), out.primes.end(), PrimeOrder{});
  return out;
}

GaussianFactorization OrderTable::factor_power_minus_one(unsigned long e) {
  if (e == 0) throw std::domain_error("factor_power_minus_one: e must be positive");
  {
    std::lock_guard lock(mutex_);
    if (auto it = powers_.find(e); it != powers_.end()) return it->second;
  }
  const GInt target = power_minus_one(e);
  GaussianFactorization out;
  std::optional<CacheRecord> cached = cache_ ? cache_->lookup(e) : std::nullopt;
  if (cached && cached->complete) {
    GInt product = kOne;
    for (const auto& [g, mult] : cached->factors) {
      out.factors.push_back({make_prime_record(g), mult});
      product *= pow(g, mult);
    }
    auto [q, r] = divrem(target, product);
    if (!r.is_zero() || !q.is_unit()) {
      throw std::runtime_error("factor cache entry for e=" + std::to_string(e) + " does not reconstruct (1+i)^e - 1");
    }
    out.unit = q;
  } else {
    std::map<GInt, unsigned, NormOrder> merged;
    GInt cofactor = kOne;
    for (unsigned long d : divisors(e)) {
      CyclotomicEntry entry = cyclotomic(d);
      for (const auto& f : entry.factorization.factors) merged[f.prime.generator] += f.multiplicity;
      if (!entry.factorization.complete) {
        out.complete = false;
        cofactor *= entry.factorization.cofactor;
      }
    }
    GInt product = kOne;
    for (const auto& [g, mult] : merged) {
      out.factors.push_back({make_prime_record(g), mult});
      product *= pow(g, mult);
    }
    if (out.complete) {
      out.unit = divide_exact(target, product);
      if (!out.unit.is_unit()) throw std::logic_error("cyclotomic pieces do not multiply to (1+i)^e - 1");
    } else {
      out.cofactor = cofactor;
    }
    if (cache_) {
      CacheRecord rec;
      rec.exponent = e;
      rec.complete = out.complete;
      for (const auto& f : out.factors) rec.factors.emplace_back(f.prime.generator, f.multiplicity);
      if (!cached || *cached != rec) cache_->append(rec);
    }
  }
  std::lock_guard lock(mutex_);
  return powers_.emplace(e, std::move(out)).first->second;
}

void OrderTable::prefetch(unsigned long e_max, unsigned threads) {
  threads = std::max(1u, threads);
  std::atomic<unsigned long> next{1};
  auto worker = [&] {
    for (unsigned long d = next++; d <= e_max; d = next++) cyclotomic(d);
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
}

std::vector<std::string> OrderTable::notes() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out = notes_;
  std::sort(out.begin(), out.end());
  return out;
}

OrderSet primes_of_order(unsigned long e, const Effort& effort) {
  OrderTable table(effort);
  return table.primes_of_order(e);
}

}  // namespace gaussrom
