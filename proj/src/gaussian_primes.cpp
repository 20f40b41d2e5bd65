#include "gaussrom/gaussian_primes.hpp"

#include "gaussrom/rational_primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace gaussrom {

namespace {

struct Point {
  std::uint64_t norm;
  std::int64_t re;
  std::int64_t im;
};

// a > b > 0 with a^2 + b^2 == p, for a prime p == 1 mod 4 below 2^62.
std::pair<std::int64_t, std::int64_t> two_squares_u64(std::uint64_t p) {
  std::uint64_t t = 0;
  for (std::uint64_t c = 2;; ++c) {
    if (powmod_u64(c, (p - 1) / 2, p) != p - 1) continue;
    t = powmod_u64(c, (p - 1) / 4, p);
    break;
  }
  std::uint64_t r0 = p, r1 = t > p / 2 ? p - t : t;
  const std::uint64_t root = isqrt_u64(p);
  while (r1 > root) {
    std::uint64_t r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  std::uint64_t b = isqrt_u64(p - r1 * r1);
  auto a = static_cast<std::int64_t>(r1);
  auto bb = static_cast<std::int64_t>(b);
  return a > bb ? std::pair{a, bb} : std::pair{bb, a};
}

void push_associates(std::vector<Point>& out, std::uint64_t norm, std::int64_t a, std::int64_t b) {
  // The four rotations of a+bi: a+bi, -b+ai, -a-bi, b-ai.
  out.push_back({norm, a, b});
  out.push_back({norm, -b, a});
  out.push_back({norm, -a, -b});
  out.push_back({norm, b, -a});
}

}  // namespace

std::uint64_t norm_bound(double x) {
  if (!(x >= 0)) throw std::invalid_argument("norm_bound: radius must be nonnegative");
  long double sq = static_cast<long double>(x) * static_cast<long double>(x);
  return static_cast<std::uint64_t>(std::floor(sq));
}

bool is_prime_element(const GInt& z) {
  if (z.is_zero() || z.is_unit()) return false;
  if (z.re == 0 || z.im == 0) {
    mpz_class p = abs(z.re == 0 ? z.im : z.re);
    return p % 4 == 3 && is_prime(p);
  }
  return is_prime(norm(z));
}

PrimeRecord make_prime_record(const GInt& z) {
  if (!is_prime_element(z)) throw std::invalid_argument("not a Gaussian prime: " + z.str());
  PrimeRecord rec;
  rec.generator = canonical_associate(z);
  rec.norm = norm(z);
  rec.degree = (z.re == 0 || z.im == 0) ? 2 : 1;
  return rec;
}

void for_each_prime_in_disk_i64(double x, const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const std::uint64_t bound = norm_bound(x);
  if (bound < 2) return;
  const std::vector<std::uint64_t> inert_candidates = primes_up_to(isqrt_u64(bound));
  std::size_t inert_next = 0;
  std::vector<Point> points;
  for_each_prime_segment(2, bound, 1 << 16, [&](std::uint64_t seg_lo, const std::vector<std::uint64_t>& batch) {
    points.clear();
    std::uint64_t seg_hi = seg_lo + (1 << 16) - 1;
    for (std::uint64_t p : batch) {
      if (p == 2) {
        push_associates(points, 2, 1, 1);
      } else if (p % 4 == 1) {
        auto [ai, bi] = two_squares_u64(p);
        push_associates(points, p, ai, bi);
        push_associates(points, p, bi, ai);
      }
    }
    while (inert_next < inert_candidates.size()) {
      std::uint64_t q = inert_candidates[inert_next];
      if (q * q > seg_hi || q * q > bound) break;
      if (q % 4 == 3) push_associates(points, q * q, static_cast<std::int64_t>(q), 0);
      ++inert_next;
    }
    std::sort(points.begin(), points.end(), [](const Point& l, const Point& r) {
      return std::tie(l.norm, l.re, l.im) < std::tie(r.norm, r.re, r.im);
    });
    for (const Point& pt : points) fn(pt.re, pt.im);
  });
}

void for_each_prime_in_disk(double x, const std::function<void(const GInt&)>& fn) {
  for_each_prime_in_disk_i64(x, [&](std::int64_t re, std::int64_t im) { fn(GInt(re, im)); });
}

std::vector<GInt> primes_in_disk(double x) {
  std::vector<GInt> out;
  for_each_prime_in_disk(x, [&](const GInt& z) { out.push_back(z); });
  return out;
}

std::uint64_t count_primes_in_disk(double x) {
  const std::uint64_t bound = norm_bound(x);
  std::uint64_t ideals = 0;
  const std::uint64_t root = isqrt_u64(bound);
  for_each_prime(2, bound, [&](std::uint64_t p) {
    if (p == 2) {
      ideals += 1;
    } else if (p % 4 == 1) {
      ideals += 2;
    } else if (p <= root) {
      ideals += 1;
    }
  });
  return 4 * ideals;
}

std::vector<PrimeRecord> prime_ideals_up_to(std::uint64_t bound) {
  std::vector<PrimeRecord> out;
  if (bound < 2) return out;
  for_each_prime(2, bound, [&](std::uint64_t p) {
    mpz_class pz(static_cast<unsigned long>(p));
    if (p == 2) {
      out.push_back({GInt(1, 1), 2, 1});
    } else if (p % 4 == 1) {
      auto [a, b] = two_squares(pz);
      out.push_back({GInt(b, a), pz, 1});
      out.push_back({GInt(a, b), pz, 1});
    } else if (p <= bound / p) {
      out.push_back({GInt(pz, 0), pz * pz, 2});
    }
  });
  std::sort(out.begin(), out.end(), PrimeOrder{});
  return out;
}

double mitsui_ratio(double x) {
  if (!(x >= 2)) throw std::invalid_argument("mitsui_ratio: x must be >= 2");
  return static_cast<double>(count_primes_in_disk(x)) * std::log(x) / (2.0 * x * x);
}

}  // namespace gaussrom
