#pragma once

// Closed intervals of doubles with outward rounding. Every operation returns
// an interval containing the exact result for all inputs in its operands.

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace gaussrom {

struct Interval {
  double lo = 0;
  double hi = 0;

  Interval() = default;
  /// Throws std::invalid_argument if lo > hi or either bound is NaN.
  Interval(double lo, double hi);
  /// The degenerate interval [v, v]; exact.
  static Interval point(double v);
  /// Smallest enclosure of a decimal literal such as "1.2771".
  static Interval decimal(const std::string& text);
  /// Smallest enclosure of an exact rational.
  static Interval rational(const mpq_class& q);

  double mid() const { return lo + (hi - lo) / 2; }
  /// Half the width: a certified bound on |mid() - exact|.
  double radius() const;
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool positive() const { return lo > 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws std::domain_error if b contains 0.
Interval operator/(const Interval& a, const Interval& b);
Interval square(const Interval& a);

// Correctly rounded endpoints via MPFR directed rounding.
/// Throws std::domain_error if a.lo < 0.
Interval sqrt(const Interval& a);
/// Throws std::domain_error unless a.lo > 0.
Interval log(const Interval& a);
Interval exp(const Interval& a);

Interval pi_interval();
Interval euler_gamma_interval();

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace gaussrom
