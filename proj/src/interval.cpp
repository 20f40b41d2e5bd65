#include "gaussrom/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gaussrom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double v) { return std::nextafter(v, -kInf); }
double up(double v) { return std::nextafter(v, kInf); }

// A 53-bit MPFR scratch value; conversions to double are then exact.
class Mpfr {
 public:
  Mpfr() { mpfr_init2(v_, 53); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// f applied to a monotone nondecreasing function's endpoints.
Interval monotone(const Interval& a, UnaryFn f) {
  Mpfr lo, hi;
  mpfr_set_d(lo.get(), a.lo, MPFR_RNDN);
  mpfr_set_d(hi.get(), a.hi, MPFR_RNDN);
  f(lo.get(), lo.get(), MPFR_RNDD);
  f(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_double(), hi.to_double()};
}

using ConstFn = int (*)(mpfr_ptr, mpfr_rnd_t);

Interval constant(ConstFn f) {
  Mpfr lo, hi;
  f(lo.get(), MPFR_RNDD);
  f(hi.get(), MPFR_RNDU);
  return {lo.to_double(), hi.to_double()};
}

}  // namespace

Interval::Interval(double l, double h) : lo(l), hi(h) {
  if (std::isnan(l) || std::isnan(h) || l > h) throw std::invalid_argument("Interval: need lo <= hi");
}

Interval Interval::point(double v) { return {v, v}; }

Interval Interval::decimal(const std::string& text) {
  Mpfr lo, hi;
  if (mpfr_set_str(lo.get(), text.c_str(), 10, MPFR_RNDD) != 0) {
    throw std::invalid_argument("Interval::decimal: cannot parse '" + text + "'");
  }
  mpfr_set_str(hi.get(), text.c_str(), 10, MPFR_RNDU);
  return {lo.to_double(), hi.to_double()};
}

Interval Interval::rational(const mpq_class& q) {
  Mpfr lo, hi;
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return {lo.to_double(), hi.to_double()};
}

double Interval::radius() const { return up((hi - lo) / 2); }

Interval operator+(const Interval& a, const Interval& b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval operator-(const Interval& a, const Interval& b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("Interval: division by an interval containing 0");
  const double q[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {down(*std::min_element(q, q + 4)), up(*std::max_element(q, q + 4))};
}

Interval square(const Interval& a) {
  if (a.lo >= 0) return {down(a.lo * a.lo), up(a.hi * a.hi)};
  if (a.hi <= 0) return {down(a.hi * a.hi), up(a.lo * a.lo)};
  return {0, up(std::max(a.lo * a.lo, a.hi * a.hi))};
}

Interval sqrt(const Interval& a) {
  if (a.lo < 0) throw std::domain_error("Interval sqrt: negative argument");
  return monotone(a, mpfr_sqrt);
}

Interval log(const Interval& a) {
  if (!(a.lo > 0)) throw std::domain_error("Interval log: argument must be positive");
  return monotone(a, mpfr_log);
}

Interval exp(const Interval& a) { return monotone(a, mpfr_exp); }

Interval pi_interval() { return constant(mpfr_const_pi); }

Interval euler_gamma_interval() { return constant(mpfr_const_euler); }

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << '[' << a.lo << ", " << a.hi << ']'; }

}  // namespace gaussrom
