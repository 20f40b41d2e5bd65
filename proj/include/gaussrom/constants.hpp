#pragma once

// Analytic constants of Q(i) used by the density bound, and the lattice
// geometry behind the sieve estimate. Quantities entering inequalities are
// certified intervals; convergence diagnostics are plain doubles.

#include "gaussrom/interval.hpp"

#include <gmpxx.h>

#include <cstdint>

namespace gaussrom {

/// sum_{k <= n} (-1)^k/(2k+1)^2, exact. Consecutive values bracket Catalan's constant.
mpq_class catalan_partial_sum(unsigned long n);

/// Catalan's constant L(chi_4, 2) with radius() <= eps, from the
/// hypergeometric series whose terms shrink by at least 4 each step.
/// Throws std::invalid_argument unless 1e-14 <= eps.
Interval catalan_constant(double eps = 1e-14);

/// L(chi_0, 2) = zeta(2)(1 - 1/4) = pi^2/8.
Interval l_trivial_character();

/// 1/(L(chi_0, 2) L(chi_4, 2)).
Interval l_product_bound();

/// (1024/pi) * 1.2771, the sieve constant for pairs of Gaussian primes.
Interval kappa_qi();

struct ConstantsReport {
  Interval l_trivial;        // pi^2/8
  Interval catalan;          // L(chi_4, 2)
  Interval l_product;        // 1/(l_trivial * catalan)
  Interval kappa;
  Interval c1;               // 4/log^2 2
  Interval c2;               // 2/log 2 + c_tilde1 c_tilde2 c_tilde3 c_tilde4
  Interval c3;               // pi
  Interval c_tilde1;         // 1/log^2 2
  Interval c_tilde2;         // kappa
  Interval c_tilde3;         // head + tail of the Romanov series
  Interval c_tilde4;         // 3/2
  Interval final_bound;      // c1/(c2 c3)
};

/// Throws std::invalid_argument for negative inputs.
ConstantsReport assemble_density_bound(double series_head, double series_tail);

struct MertensReport {
  std::uint64_t x = 0;
  double product = 0;    // prod over prime ideals of norm <= x of (1 - 1/N)^-1
  double predicted = 0;  // e^gamma (pi/4) log x
  double rel_err = 0;
};

/// Throws std::invalid_argument for x < 100.
MertensReport mertens_qi_check(std::uint64_t x);

/// sum_{0 < a^2 + b^2 <= x} 1/(a^2 + b^2) - pi log x, with compensated
/// summation. Throws std::invalid_argument for x < 1.
double sierpinski_partial(std::uint64_t x);

/// Area of the intersection of two radius-x disks whose centres are d apart.
/// Throws std::invalid_argument unless x > 0 and d >= 0.
double circle_intersection_area(double x, double d);

/// Same area as 2[G(x) - G(d/2)] with G(t) = t sqrt(x^2 - t^2) + x^2 arcsin(t/x),
/// the antiderivative of 2 sqrt(x^2 - t^2).
double circle_intersection_area_antiderivative(double x, double d);

/// #{z in Z[i] : norm(z) <= floor(x^2)}. Throws std::invalid_argument for x < 0.
std::uint64_t lattice_count(double x);

}  // namespace gaussrom
