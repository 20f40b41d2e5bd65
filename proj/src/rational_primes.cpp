#include "gaussrom/rational_primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace gaussrom {

namespace {

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_round(const mpz_class& n, const mpz_class& d, unsigned long s, const mpz_class& a) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  mpz_class n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  using u128 = unsigned __int128;
  while (u128{r} * r > n) --r;
  while (u128{r + 1} * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= n; q += p) composite[q] = true;
  }
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (!composite[p]) out.push_back(p);
  }
  return out;
}

void for_each_prime_segment(std::uint64_t lo, std::uint64_t hi, std::uint64_t segment_size,
                            const std::function<void(std::uint64_t, const std::vector<std::uint64_t>&)>& fn) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<std::uint64_t>(lo, 2);
  segment_size = std::max<std::uint64_t>(segment_size, 1024);
  const std::vector<std::uint64_t> base = primes_up_to(isqrt_u64(hi));
  std::vector<char> composite(segment_size);
  std::vector<std::uint64_t> batch;
  for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += segment_size) {
    std::uint64_t seg_hi = std::min(hi, seg_lo + segment_size - 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (std::uint64_t p : base) {
      if (p * p > seg_hi) break;
      std::uint64_t start = std::max(p * p, ((seg_lo + p - 1) / p) * p);
      for (std::uint64_t q = start; q <= seg_hi; q += p) composite[q - seg_lo] = 1;
    }
    batch.clear();
    for (std::uint64_t v = seg_lo; v <= seg_hi; ++v) {
      if (!composite[v - seg_lo]) batch.push_back(v);
    }
    fn(seg_lo, batch);
    if (seg_hi == hi) break;
  }
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& fn) {
  for_each_prime_segment(lo, hi, 1 << 18, [&](std::uint64_t, const std::vector<std::uint64_t>& batch) {
    for (std::uint64_t p : batch) fn(p);
  });
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve prime bases are exact for all 64-bit inputs.
  for (unsigned a : kWitnesses) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (sgn(n) <= 0) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
  for (unsigned p : kWitnesses) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned a : kWitnesses) {
    if (!miller_rabin_round(n, d, s, mpz_class(a))) return false;
  }
  static const mpz_class kDeterministicLimit("3317044064679887385961981", 10);
  if (n < kDeterministicLimit) return true;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  mpz_class span = n - 4;
  for (int round = 0; round < 64; ++round) {
    mpz_class a = rng.get_z_range(span) + 2;
    if (!miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

std::pair<mpz_class, mpz_class> two_squares(const mpz_class& p) {
  if (p % 4 != 1 || !is_prime(p)) {
    throw std::invalid_argument("two_squares: " + p.get_str() + " is not a prime congruent to 1 mod 4");
  }
  // A square root of -1 modulo p from any quadratic non-residue c.
  mpz_class exponent = (p - 1) / 4;
  mpz_class t;
  for (unsigned long c = 2;; ++c) {
    mpz_class cc(c);
    if (mpz_legendre(cc.get_mpz_t(), p.get_mpz_t()) != -1) continue;
    mpz_powm(t.get_mpz_t(), cc.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
    break;
  }
  // Cornacchia: run Euclid on (p, t) until the remainder drops below sqrt(p).
  mpz_class r0 = p, r1 = t;
  if (r1 > p / 2) r1 = p - r1;
  mpz_class root = sqrt(p);
  while (r1 > root) {
    mpz_class r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  mpz_class a = r1;
  mpz_class rest = p - a * a;
  mpz_class b = sqrt(rest);
  if (b * b != rest) throw std::logic_error("two_squares: Cornacchia failed for " + p.get_str());
  if (a < b) std::swap(a, b);
  return {a, b};
}

}  // namespace gaussrom
