#include "gaussrom/gint.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace gaussrom {

namespace {

// Nearest integer to n/d for d > 0; exact halves go toward zero.
mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  mpz_class twice_r = 2 * r;
  int c = cmp(twice_r, d);
  if (c > 0 || (c == 0 && sgn(n) < 0)) {
    ++q;
  }
  return q;
}

mpz_class parse_component(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  std::string digits(s);
  if (digits.front() == '+') digits.erase(0, 1);
  if (digits.empty()) throw std::invalid_argument("malformed Gaussian integer: " + std::string(whole));
  std::size_t start = digits.front() == '-' ? 1 : 0;
  if (start == digits.size()) throw std::invalid_argument("malformed Gaussian integer: " + std::string(whole));
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw std::invalid_argument("malformed Gaussian integer: " + std::string(whole));
    }
  }
  return mpz_class(digits, 10);
}

}  // namespace

bool GInt::is_unit() const {
  return (abs(re) == 1 && im == 0) || (re == 0 && abs(im) == 1);
}

GInt GInt::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty Gaussian integer");
  if (s.back() != 'i') return GInt(parse_component(s, text), 0);

  std::string_view body(s.data(), s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return GInt(0, parse_component(body, text));
  }
  return GInt(parse_component(body.substr(0, split), text), parse_component(body.substr(split), text));
}

std::string GInt::str() const {
  std::string out = re.get_str();
  if (sgn(im) < 0) {
    out += '-';
    out += mpz_class(-im).get_str();
  } else {
    out += '+';
    out += im.get_str();
  }
  out += 'i';
  return out;
}

GInt operator+(const GInt& a, const GInt& b) { return GInt(a.re + b.re, a.im + b.im); }
GInt operator-(const GInt& a, const GInt& b) { return GInt(a.re - b.re, a.im - b.im); }
GInt operator*(const GInt& a, const GInt& b) {
  return GInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
GInt operator-(const GInt& a) { return GInt(-a.re, -a.im); }
GInt& operator+=(GInt& a, const GInt& b) {
  a.re += b.re;
  a.im += b.im;
  return a;
}
GInt& operator-=(GInt& a, const GInt& b) {
  a.re -= b.re;
  a.im -= b.im;
  return a;
}
GInt& operator*=(GInt& a, const GInt& b) {
  a = a * b;
  return a;
}
bool operator==(const GInt& a, const GInt& b) { return a.re == b.re && a.im == b.im; }

std::ostream& operator<<(std::ostream& os, const GInt& z) { return os << z.str(); }

GInt conj(const GInt& z) { return GInt(z.re, -z.im); }

mpz_class norm(const GInt& z) { return z.re * z.re + z.im * z.im; }

GInt pow(const GInt& z, unsigned long k) {
  GInt result(1, 0);
  GInt base = z;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

GInt powmod(const GInt& z, const mpz_class& k, const GInt& m) {
  if (sgn(k) < 0) throw std::domain_error("powmod: negative exponent");
  GInt result = divrem(GInt(1, 0), m).remainder;
  GInt base = divrem(z, m).remainder;
  std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t b = bits; b-- > 0;) {
    result = divrem(result * result, m).remainder;
    if (mpz_tstbit(k.get_mpz_t(), b)) result = divrem(result * base, m).remainder;
  }
  return result;
}

DivRem divrem(const GInt& a, const GInt& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by zero");
  // a / b = a * conj(b) / norm(b)
  mpz_class n = norm(b);
  mpz_class num_re = a.re * b.re + a.im * b.im;
  mpz_class num_im = a.im * b.re - a.re * b.im;
  GInt q(round_div(num_re, n), round_div(num_im, n));
  GInt r = a - q * b;
  return {std::move(q), std::move(r)};
}

GInt divide_exact(const GInt& a, const GInt& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("divide_exact: " + b.str() + " does not divide " + a.str());
  return q;
}

bool divides(const GInt& d, const GInt& a) {
  if (d.is_zero()) return a.is_zero();
  return divrem(a, d).remainder.is_zero();
}

GInt canonical_associate(const GInt& z) {
  if (z.is_zero()) throw std::domain_error("canonical_associate: zero has no associates");
  GInt w = z;
  // Rotate by i until w lands in the quadrant re > 0, im >= 0.
  for (int turn = 0; turn < 4; ++turn) {
    if (sgn(w.re) > 0 && sgn(w.im) >= 0) return w;
    w = GInt(-w.im, w.re);
  }
  throw std::logic_error("canonical_associate: unreachable");
}

bool is_canonical(const GInt& z) { return sgn(z.re) > 0 && sgn(z.im) >= 0; }

GInt unit_part(const GInt& z) {
  GInt c = canonical_associate(z);
  for (const GInt& u : {GInt(1, 0), GInt(0, 1), GInt(-1, 0), GInt(0, -1)}) {
    if (u * c == z) return u;
  }
  throw std::logic_error("unit_part: unreachable");
}

GInt gcd(const GInt& a, const GInt& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  GInt x = a;
  GInt y = b;
  while (!y.is_zero()) {
    GInt r = divrem(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(x);
}

ExtGcd ext_gcd(const GInt& a, const GInt& b) {
  GInt old_r = a, r = b;
  GInt old_s(1, 0), s(0, 0);
  GInt old_t(0, 0), t(1, 0);
  while (!r.is_zero()) {
    auto [q, rem] = divrem(old_r, r);
    old_r = std::exchange(r, rem);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

bool congruent(const GInt& a, const GInt& b, const GInt& m) {
  if (m.is_zero()) throw std::domain_error("congruent: zero modulus");
  return divrem(a - b, m).remainder.is_zero();
}

bool NormOrder::operator()(const GInt& a, const GInt& b) const {
  int c = cmp(norm(a), norm(b));
  if (c != 0) return c < 0;
  c = cmp(a.re, b.re);
  if (c != 0) return c < 0;
  return cmp(a.im, b.im) < 0;
}

std::size_t GIntHash::operator()(const GInt& z) const {
  std::size_t h1 = std::hash<std::string>{}(z.re.get_str(16));
  std::size_t h2 = std::hash<std::string>{}(z.im.get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace gaussrom
