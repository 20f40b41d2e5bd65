#include "gaussrom/factor.hpp"

#include "gaussrom/rational_primes.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace gaussrom {

namespace {

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialDivisionLimit);
  return primes;
}

// Brent's cycle-finding variant of Pollard rho, products of |x - y| batched
// between gcds. Returns a nontrivial divisor or nothing once the budget is spent.
std::optional<mpz_class> brent_rho(const mpz_class& n, std::uint64_t budget) {
  constexpr std::uint64_t kBatch = 128;
  std::uint64_t spent = 0;
  for (unsigned long c = 1; spent < budget; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    auto step = [&](mpz_class& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1 && spent < budget) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      spent += r;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        spent += lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        step(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

std::optional<mpz_class> pollard_pm1(const mpz_class& n, std::uint64_t bound) {
  mpz_class a = 2, g = 1;
  bool overshot = false;
  std::uint64_t since_gcd = 0;
  auto check = [&] {
    mpz_class am1 = a - 1;
    mpz_gcd(g.get_mpz_t(), am1.get_mpz_t(), n.get_mpz_t());
    if (g == n) overshot = true;
  };
  for_each_prime(2, bound, [&](std::uint64_t p) {
    if (g != 1 || overshot) return;
    std::uint64_t pk = p;
    while (pk <= bound / p) pk *= p;
    mpz_powm_ui(a.get_mpz_t(), a.get_mpz_t(), pk, n.get_mpz_t());
    if (++since_gcd == 64) {
      since_gcd = 0;
      check();
    }
  });
  if (g == 1 && !overshot) check();
  if (!overshot && g > 1 && g < n) return g;
  return std::nullopt;
}

}  // namespace

Effort Effort::scaled(std::uint64_t level) {
  if (level == 0) throw std::invalid_argument("Effort::scaled: level must be positive");
  Effort e;
  e.rho_iterations *= level;
  e.pm1_bound *= level;
  return e;
}

RationalFactorization factor_norm(const mpz_class& n, const Effort& effort) {
  if (sgn(n) < 1) throw std::domain_error("factor_norm: N must be positive");
  RationalFactorization out;
  mpz_class rest = n;
  for (std::uint64_t p : small_primes()) {
    if (rest == 1) break;
    mpz_class pz(static_cast<unsigned long>(p));
    if (pz * pz > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      out.primes.push_back(pz);
    }
  }

  std::vector<mpz_class> pending;
  if (rest > 1) pending.push_back(rest);
  while (!pending.empty()) {
    mpz_class m = std::move(pending.back());
    pending.pop_back();
    if (is_prime(m)) {
      out.primes.push_back(m);
      continue;
    }
    mpz_class root;
    if (mpz_perfect_square_p(m.get_mpz_t())) {
      root = sqrt(m);
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    std::optional<mpz_class> d = brent_rho(m, effort.rho_iterations);
    if (!d) d = pollard_pm1(m, effort.pm1_bound);
    if (!d) {
      out.cofactor *= m;
      out.complete = false;
      continue;
    }
    pending.push_back(*d);
    pending.push_back(m / *d);
  }
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

std::vector<mpz_class> distinct(const std::vector<mpz_class>& primes) {
  std::vector<mpz_class> out(primes);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gaussrom
