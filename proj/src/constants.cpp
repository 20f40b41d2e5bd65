#include "gaussrom/constants.hpp"

#include "gaussrom/gaussian_primes.hpp"
#include "gaussrom/rational_primes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gaussrom {

namespace {

// Kahan-Babuska compensated accumulator.
class CompensatedSum {
 public:
  void add(long double v) {
    long double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + carry_; }

 private:
  long double sum_ = 0;
  long double carry_ = 0;
};

}  // namespace

mpq_class catalan_partial_sum(unsigned long n) {
  mpq_class s = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    mpz_class d = 2 * mpz_class(k) + 1;
    mpq_class term(1, d * d);
    term.canonicalize();
    if (k % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

Interval catalan_constant(double eps) {
  if (!(eps >= 1e-14)) throw std::invalid_argument("catalan_constant: eps must be at least 1e-14");
  // G = (pi/8) log(2 + sqrt 3) + (3/8) sum_n t_n,  t_n = (n!)^2 / ((2n)! (2n+1)^2).
  // t_{n+1}/t_n = (n+1)(2n+1) / (2 (2n+3)^2) < 1/4, so sum_{n >= N} t_n <= (4/3) t_N.
  mpq_class sum = 0;
  mpq_class ratio_part = 1;  // (n!)^2/(2n)!
  unsigned long n = 0;
  mpq_class term = 1;
  for (;; ++n) {
    mpz_class odd = 2 * mpz_class(n) + 1;
    term = ratio_part / (odd * odd);
    if (term.get_d() / 2 <= eps / 4) break;
    sum += term;
    ratio_part *= mpq_class(mpz_class(n + 1) * (n + 1), mpz_class(2 * n + 1) * (2 * n + 2));
    ratio_part.canonicalize();
  }
  mpq_class tail_bound = term * 4 / 3;
  Interval series(Interval::rational(sum).lo, Interval::rational(sum + tail_bound).hi);
  Interval head = pi_interval() / Interval::point(8) * log(Interval::point(2) + sqrt(Interval::point(3)));
  Interval g = head + Interval::decimal("0.375") * series;
  if (g.radius() > eps) throw std::logic_error("catalan_constant: enclosure wider than requested");
  return g;
}

Interval l_trivial_character() { return square(pi_interval()) / Interval::point(8); }

Interval l_product_bound() {
  return Interval::point(1) / (l_trivial_character() * catalan_constant());
}

Interval kappa_qi() { return Interval::point(1024) / pi_interval() * Interval::decimal("1.2771"); }

ConstantsReport assemble_density_bound(double series_head, double series_tail) {
  if (!(series_head >= 0) || !(series_tail >= 0)) {
    throw std::invalid_argument("assemble_density_bound: series pieces must be nonnegative");
  }
  ConstantsReport r;
  r.l_trivial = l_trivial_character();
  r.catalan = catalan_constant();
  r.l_product = Interval::point(1) / (r.l_trivial * r.catalan);
  r.kappa = kappa_qi();
  const Interval log2 = log(Interval::point(2));
  r.c_tilde1 = Interval::point(1) / square(log2);
  r.c_tilde2 = r.kappa;
  r.c_tilde3 = Interval::point(series_head) + Interval::point(series_tail);
  r.c_tilde4 = Interval::point(1.5);
  r.c1 = Interval::point(4) * r.c_tilde1;
  r.c2 = Interval::point(2) / log2 + r.c_tilde1 * r.c_tilde2 * r.c_tilde3 * r.c_tilde4;
  r.c3 = pi_interval();
  r.final_bound = r.c1 / (r.c2 * r.c3);
  return r;
}

MertensReport mertens_qi_check(std::uint64_t x) {
  if (x < 100) throw std::invalid_argument("mertens_qi_check: x must be at least 100");
  CompensatedSum log_product;
  auto factor = [&](std::uint64_t n, int copies) {
    for (int c = 0; c < copies; ++c) log_product.add(-std::log1p(-1.0L / static_cast<long double>(n)));
  };
  for_each_prime(2, x, [&](std::uint64_t p) {
    if (p == 2) {
      factor(2, 1);
    } else if (p % 4 == 1) {
      factor(p, 2);
    } else if (p <= x / p) {
      factor(p * p, 1);
    }
  });
  MertensReport r;
  r.x = x;
  r.product = static_cast<double>(std::exp(log_product.value()));
  r.predicted = std::exp(std::numbers::egamma) * (std::numbers::pi / 4) * std::log(static_cast<double>(x));
  r.rel_err = std::fabs(r.product - r.predicted) / r.predicted;
  return r;
}

double sierpinski_partial(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("sierpinski_partial: x must be at least 1");
  CompensatedSum sum;
  const auto w = static_cast<std::int64_t>(isqrt_u64(x));
  // Quarter-plane a >= 1, b >= 0 covers every nonzero point once under rotation by i.
  for (std::int64_t a = 1; a <= w; ++a) {
    const auto a2 = static_cast<std::uint64_t>(a * a);
    const auto h = static_cast<std::int64_t>(isqrt_u64(x - a2));
    CompensatedSum row;
    for (std::int64_t b = h; b >= 0; --b) row.add(1.0L / static_cast<long double>(a2 + static_cast<std::uint64_t>(b * b)));
    sum.add(4 * row.value());
  }
  return static_cast<double>(sum.value() - std::numbers::pi_v<long double> * std::log(static_cast<long double>(x)));
}

double circle_intersection_area(double x, double d) {
  if (!(x > 0) || !(d >= 0)) throw std::invalid_argument("circle_intersection_area: need x > 0 and d >= 0");
  if (d >= 2 * x) return 0;
  return 2 * x * x * std::acos(d / (2 * x)) - (d / 2) * std::sqrt(4 * x * x - d * d);
}

double circle_intersection_area_antiderivative(double x, double d) {
  if (!(x > 0) || !(d >= 0)) throw std::invalid_argument("circle_intersection_area: need x > 0 and d >= 0");
  if (d >= 2 * x) return 0;
  auto g = [x](double t) { return t * std::sqrt(std::max(0.0, x * x - t * t)) + x * x * std::asin(std::min(1.0, t / x)); };
  return 2 * (g(x) - g(d / 2));
}

std::uint64_t lattice_count(double x) {
  if (!(x >= 0)) throw std::invalid_argument("lattice_count: x must be nonnegative");
  const std::uint64_t bound = norm_bound(x);
  const std::uint64_t w = isqrt_u64(bound);
  std::uint64_t count = 2 * w + 1;  // a == 0
  for (std::uint64_t a = 1; a <= w; ++a) count += 2 * (2 * isqrt_u64(bound - a * a) + 1);
  return count;
}

}  // namespace gaussrom
