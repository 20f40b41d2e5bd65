#pragma once

// Exact arithmetic in the Gaussian integers Z[i].

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace gaussrom {

/// A Gaussian integer re + im*i with arbitrary-precision components.
struct GInt {
  mpz_class re;
  mpz_class im;

  GInt() = default;
  GInt(long r, long i = 0) : re(r), im(i) {}
  GInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const;

  /// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" (decimal components).
  /// Throws std::invalid_argument on malformed input.
  static GInt parse(std::string_view text);

  /// Always "a+bi" or "a-bi", both components written out.
  std::string str() const;
};

GInt operator+(const GInt& a, const GInt& b);
GInt operator-(const GInt& a, const GInt& b);
GInt operator*(const GInt& a, const GInt& b);
GInt operator-(const GInt& a);
GInt& operator+=(GInt& a, const GInt& b);
GInt& operator-=(GInt& a, const GInt& b);
GInt& operator*=(GInt& a, const GInt& b);
bool operator==(const GInt& a, const GInt& b);

std::ostream& operator<<(std::ostream& os, const GInt& z);

inline const GInt kOnePlusI{1, 1};

GInt conj(const GInt& z);

/// re^2 + im^2.
mpz_class norm(const GInt& z);

/// In Q(i) both complex embeddings have modulus |z|, so house(z)^2 == norm(z).
/// All "house <= x" predicates in this library compare norm against x^2.
inline mpz_class house_squared(const GInt& z) { return norm(z); }

GInt pow(const GInt& z, unsigned long k);

/// z^k reduced modulo m after every step (remainders from divrem).
GInt powmod(const GInt& z, const mpz_class& k, const GInt& m);

struct DivRem {
  GInt quotient;
  GInt remainder;
};

/// a = q*b + r with norm(r) <= norm(b)/2. The quotient components are the
/// nearest integers to the exact quotient a/b, half-integers rounded toward
/// zero. Throws std::domain_error if b == 0.
DivRem divrem(const GInt& a, const GInt& b);

/// Exact quotient a/b. Throws std::domain_error if b does not divide a.
GInt divide_exact(const GInt& a, const GInt& b);

bool divides(const GInt& d, const GInt& a);

/// The unique associate with re > 0 and im >= 0. Throws on zero.
GInt canonical_associate(const GInt& z);

bool is_canonical(const GInt& z);

/// Canonical generator of the ideal (a, b). Throws if both are zero.
GInt gcd(const GInt& a, const GInt& b);

struct ExtGcd {
  GInt g;  // not canonicalised: s*a + t*b == g exactly
  GInt s;
  GInt t;
};

ExtGcd ext_gcd(const GInt& a, const GInt& b);

/// True iff m divides a - b. Throws std::domain_error if m == 0.
bool congruent(const GInt& a, const GInt& b, const GInt& m);

/// The unit u with z == u * canonical_associate(z).
GInt unit_part(const GInt& z);

/// Orders by norm, then re, then im.
struct NormOrder {
  bool operator()(const GInt& a, const GInt& b) const;
};

struct GIntHash {
  std::size_t operator()(const GInt& z) const;
};

}  // namespace gaussrom
