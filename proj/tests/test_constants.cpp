#include "gaussrom/constants.hpp"
#include "gaussrom/interval.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>
#include <mpfr.h>

#include <cmath>
#include <random>

using namespace gaussrom;

namespace {

double mpfr_catalan() {
  mpfr_t g;
  mpfr_init2(g, 200);
  mpfr_const_catalan(g, MPFR_RNDN);
  double v = mpfr_get_d(g, MPFR_RNDN);
  mpfr_clear(g);
  return v;
}

// Lens area from the integral of the chord length over the overlap.
double lens_by_quadrature(double x, double d) {
  if (d >= 2 * x) return 0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double half = d / 2;
  auto chord = [x](double t) { return 2 * std::sqrt(std::max(0.0, x * x - t * t)); };
  return 2 * integrator.integrate(chord, half, x);
}

}  // namespace

TEST(Interval, ArithmeticEnclosesExactValues) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    Interval ia = Interval::rational(a), ib = Interval::rational(b);
    auto encloses = [](const Interval& i, const mpq_class& q) { return mpq_class(i.lo) <= q && q <= mpq_class(i.hi); };
    EXPECT_TRUE(encloses(ia, a));
    EXPECT_TRUE(encloses(ia + ib, a + b));
    EXPECT_TRUE(encloses(ia - ib, a - b));
    EXPECT_TRUE(encloses(ia * ib, a * b));
    EXPECT_TRUE(encloses(square(ia), a * a));
    if (b != 0) {
      EXPECT_TRUE(encloses(ia / ib, a / b));
    }
  }
}

TEST(Interval, Validation) {
  EXPECT_THROW(Interval(2, 1), std::invalid_argument);
  EXPECT_THROW(Interval(NAN, 1), std::invalid_argument);
  EXPECT_THROW(Interval(1, 2) / Interval(-1, 1), std::domain_error);
  EXPECT_THROW(sqrt(Interval(-1, 1)), std::domain_error);
  EXPECT_THROW(log(Interval(0, 1)), std::domain_error);
  EXPECT_THROW(Interval::decimal("1.2x"), std::invalid_argument);
}

TEST(Interval, DecimalAndTranscendentals) {
  Interval k = Interval::decimal("1.2771");
  EXPECT_TRUE(k.contains(1.2771));
  EXPECT_LE(k.hi - k.lo, 2.3e-16);
  Interval one_tenth = Interval::decimal("0.1");
  EXPECT_LT(one_tenth.lo, one_tenth.hi);  // 0.1 is not a double
  EXPECT_TRUE(pi_interval().contains(M_PI));
  EXPECT_TRUE(sqrt(Interval::point(2)).contains(M_SQRT2));
  EXPECT_TRUE(log(Interval::point(2)).contains(M_LN2));
  EXPECT_TRUE(exp(Interval::point(1)).contains(M_E));
  EXPECT_TRUE(euler_gamma_interval().contains(0.57721566490153286));
  EXPECT_LE(euler_gamma_interval().radius(), 1.2e-16);
}

TEST(Constants, CatalanPartialSums) {
  EXPECT_EQ(catalan_partial_sum(0), 1);
  EXPECT_EQ(catalan_partial_sum(1), mpq_class(8, 9));
  const double g = mpfr_catalan();
  for (unsigned long n = 0; n < 40; n += 2) {
    // Even partial sums overshoot, odd ones undershoot.
    EXPECT_GT(catalan_partial_sum(n).get_d(), g);
    EXPECT_LT(catalan_partial_sum(n + 1).get_d(), g);
  }
}

TEST(Constants, CatalanCertified) {
  const double g = mpfr_catalan();
  Interval tight = catalan_constant();
  EXPECT_TRUE(tight.contains(g));
  EXPECT_LE(tight.radius(), 1e-14);
  Interval loose = catalan_constant(1e-10);
  EXPECT_TRUE(loose.contains(g));
  EXPECT_NEAR(loose.mid(), 0.9159655942, 1e-10);
  EXPECT_THROW(catalan_constant(1e-16), std::invalid_argument);
  EXPECT_THROW(catalan_constant(0), std::invalid_argument);
}

TEST(Constants, LValues) {
  EXPECT_TRUE(l_trivial_character().contains(M_PI * M_PI / 8));
  Interval product = l_product_bound();
  EXPECT_GE(product.lo, 0.88492);
  EXPECT_NEAR(product.mid(), 0.884925, 1e-5);
  EXPECT_TRUE(product.contains(8 / (M_PI * M_PI * mpfr_catalan())));
}

TEST(Constants, Kappa) {
  Interval k = kappa_qi();
  EXPECT_NEAR(k.mid(), 416.27, 0.01);
  EXPECT_TRUE(k.contains(1024 / M_PI * 1.2771));
  EXPECT_NEAR((k / Interval::decimal("1.2771")).mid(), 325.949, 1e-3);
}

TEST(Constants, Assembly) {
  ConstantsReport r = assemble_density_bound(1.27095, 0.57749);
  EXPECT_NEAR(r.c_tilde3.mid(), 1.84844, 1e-12);
  EXPECT_NEAR(r.final_bound.mid(), 0.00110183, 2e-7);
  EXPECT_LE(r.final_bound.radius(), 1e-12);
  EXPECT_TRUE(r.c3.contains(M_PI));
  EXPECT_TRUE(r.c1.contains(4 / (M_LN2 * M_LN2)));
  EXPECT_TRUE(r.c_tilde4.contains(1.5));
  // Independent double evaluation of the same formula.
  const double c2 = 2 / M_LN2 + (1 / (M_LN2 * M_LN2)) * (1024 / M_PI * 1.2771) * 1.84844 * 1.5;
  EXPECT_NEAR(r.final_bound.mid(), (4 / (M_LN2 * M_LN2)) / (c2 * M_PI), 1e-15);
  EXPECT_THROW(assemble_density_bound(-1, 0.5), std::invalid_argument);
  EXPECT_THROW(assemble_density_bound(1, -0.5), std::invalid_argument);
}

TEST(Constants, AssemblyIsMonotoneInTheSeries) {
  double previous = 1;
  for (double tail = 0; tail <= 2; tail += 0.25) {
    const double bound = assemble_density_bound(1.27095, tail).final_bound.mid();
    EXPECT_LT(bound, previous);
    previous = bound;
  }
  // The computed head is smaller than the quoted one, so it gives a larger bound.
  EXPECT_GT(assemble_density_bound(1.2666844, 0.57747962).final_bound.mid(),
            assemble_density_bound(1.27095, 0.57749).final_bound.mid());
}

TEST(Mertens, GaussianMertensProduct) {
  MertensReport small = mertens_qi_check(100);
  EXPECT_TRUE(std::isfinite(small.product));
  EXPECT_GT(small.product, 0);
  MertensReport big = mertens_qi_check(1000000);
  EXPECT_LT(std::abs(big.rel_err), 0.02);
  EXPECT_NEAR(big.predicted, std::exp(0.5772156649015329) * M_PI / 4 * std::log(1e6), 1e-9);
  EXPECT_GT(big.product, mertens_qi_check(10000).product);
  EXPECT_THROW(mertens_qi_check(99), std::invalid_argument);
}

TEST(Sierpinski, PartialSums) {
  EXPECT_DOUBLE_EQ(sierpinski_partial(1), 4.0);
  EXPECT_NEAR(sierpinski_partial(2), 6 - M_PI * std::log(2.0), 1e-14);
  EXPECT_NEAR(sierpinski_partial(2), 3.8224, 1e-4);
  EXPECT_NEAR(sierpinski_partial(1000000), sierpinski_partial(4000000), 5e-3);
  EXPECT_THROW(sierpinski_partial(0), std::invalid_argument);
}

TEST(Sierpinski, MatchesDirectLatticeSum) {
  for (std::uint64_t x : {3ULL, 10ULL, 50ULL, 1000ULL}) {
    double sum = 0;
    const long r = static_cast<long>(std::sqrt(static_cast<double>(x))) + 1;
    for (long a = -r; a <= r; ++a) {
      for (long b = -r; b <= r; ++b) {
        const long n = a * a + b * b;
        if (n > 0 && n <= static_cast<long>(x)) sum += 1.0 / static_cast<double>(n);
      }
    }
    EXPECT_NEAR(sierpinski_partial(x), sum - M_PI * std::log(static_cast<double>(x)), 1e-11) << x;
  }
}

TEST(Geometry, LensExamples) {
  EXPECT_NEAR(circle_intersection_area(3, 0), 9 * M_PI, 1e-12);
  EXPECT_DOUBLE_EQ(circle_intersection_area(1, 2), 0.0);
  EXPECT_DOUBLE_EQ(circle_intersection_area(1, 5), 0.0);
  EXPECT_NEAR(circle_intersection_area(1, 1), 2 * M_PI / 3 - std::sqrt(3.0) / 2, 1e-12);
  EXPECT_NEAR(circle_intersection_area(1, 1), 1.22837, 1e-5);
  EXPECT_THROW(circle_intersection_area(0, 1), std::invalid_argument);
  EXPECT_THROW(circle_intersection_area(1, -1), std::invalid_argument);
  EXPECT_THROW(circle_intersection_area_antiderivative(-1, 1), std::invalid_argument);
}

TEST(Geometry, LensFormulasAgreeWithQuadrature) {
  for (double x : {1.0, 7.5, 100.0, 1600.0}) {
    double previous = circle_intersection_area(x, 0) + 1;
    for (double frac : {0.0, 0.01, 0.3, 0.999, 1.0, 1.7, 1.9999, 2.0}) {
      const double d = frac * x;
      const double closed = circle_intersection_area(x, d);
      const double scale = std::max(1.0, x * x);
      EXPECT_NEAR(closed, lens_by_quadrature(x, d), 1e-9 * scale) << x << ' ' << d;
      EXPECT_NEAR(closed, circle_intersection_area_antiderivative(x, d), 1e-9 * scale) << x << ' ' << d;
      EXPECT_LE(closed, previous);
      previous = closed;
    }
  }
}

TEST(Geometry, LensDeficit) {
  for (double x : {100.0, 400.0, 1600.0}) {
    EXPECT_LE(M_PI * x * x - circle_intersection_area(x, std::sqrt(x)), 2 * std::pow(x, 1.5)) << x;
  }
}

TEST(Geometry, LatticeCount) {
  EXPECT_EQ(lattice_count(0), 1u);
  EXPECT_EQ(lattice_count(1), 5u);
  EXPECT_EQ(lattice_count(2), 13u);
  EXPECT_EQ(lattice_count(10), 317u);
  EXPECT_THROW(lattice_count(-1), std::invalid_argument);
  for (double x : {3.0, 7.7, 31.0, 100.0}) {
    std::uint64_t oracle = 0;
    const long bound = static_cast<long>(std::floor(x * x));
    for (long a = -101; a <= 101; ++a) {
      for (long b = -101; b <= 101; ++b) oracle += a * a + b * b <= bound;
    }
    EXPECT_EQ(lattice_count(x), oracle) << x;
  }
  for (double x = 10; x <= 100000; x *= 3.7) {
    const double count = static_cast<double>(lattice_count(x));
    EXPECT_LE(std::abs(count - M_PI * x * x), 8 * x + 8) << x;
  }
}
