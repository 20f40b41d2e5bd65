#include "gaussrom/covering.hpp"

#include "gaussrom/constants.hpp"
#include "gaussrom/orders.hpp"
#include "gaussrom/rational_primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace gaussrom {

namespace {

constexpr unsigned long kMaxCoveringLcm = 1UL << 32;

double house(const GInt& z) { return std::sqrt(norm(z).get_d()); }

// Rows a in [a_lo, a_hi) of the t-box, t = a + bi, with house(x0 + tM) <= radius.
template <typename Fn>
void for_each_class_member(const GInt& x0, const GInt& m, double radius, long a_lo, long a_hi, Fn&& fn) {
  const mpz_class bound(static_cast<unsigned long>(norm_bound(radius)));
  const long t_max = static_cast<long>(std::ceil((radius + house(x0)) / house(m))) + 1;
  for (long a = std::max(a_lo, -t_max); a < std::min(a_hi, t_max + 1); ++a) {
    for (long b = -t_max; b <= t_max; ++b) {
      GInt zeta = x0 + GInt(a, b) * m;
      if (norm(zeta) <= bound) fn(zeta);
    }
  }
}

long class_box_half_width(const Obstruction& obs, double radius) {
  return static_cast<long>(std::ceil((radius + house(obs.x0)) / house(obs.modulus))) + 1;
}

}  // namespace

CoveringResult verify_covering(const CoveringSystem& system) {
  if (system.empty()) throw std::invalid_argument("verify_covering: empty system");
  CoveringResult out;
  for (const auto& c : system) {
    if (c.modulus < 2) throw std::invalid_argument("verify_covering: moduli must be at least 2");
    out.lcm = std::lcm(out.lcm, c.modulus);
    if (out.lcm > kMaxCoveringLcm) throw std::length_error("verify_covering: lcm of moduli exceeds 2^32");
  }
  std::vector<bool> covered(out.lcm, false);
  for (const auto& c : system) {
    for (unsigned long r = c.residue % c.modulus; r < out.lcm; r += c.modulus) covered[r] = true;
  }
  auto gap = std::find(covered.begin(), covered.end(), false);
  out.covering = gap == covered.end();
  if (!out.covering) out.witness = static_cast<unsigned long>(gap - covered.begin());
  return out;
}

CoveringSystem standard_covering() { return {{0, 2}, {0, 3}, {1, 4}, {3, 8}, {7, 12}, {23, 24}}; }

GaussianCongruence make_congruence(const GInt& residue, const GInt& modulus) {
  return {divrem(residue, modulus).remainder, modulus};
}

NonCoprimeModuli::NonCoprimeModuli(std::size_t i, std::size_t j, const GInt& common)
    : std::invalid_argument("gaussian_crt: moduli #" + std::to_string(i) + " and #" + std::to_string(j) +
                            " share the factor " + common.str()),
      first(i),
      second(j) {}

CrtSolution gaussian_crt(const std::vector<GaussianCongruence>& congruences) {
  if (congruences.empty()) throw std::invalid_argument("gaussian_crt: no congruences");
  for (std::size_t i = 0; i < congruences.size(); ++i) {
    for (std::size_t j = i + 1; j < congruences.size(); ++j) {
      GInt g = gcd(congruences[i].modulus, congruences[j].modulus);
      if (!g.is_unit()) throw NonCoprimeModuli(i, j, g);
    }
  }
  GInt x = divrem(congruences[0].residue, congruences[0].modulus).remainder;
  GInt m = congruences[0].modulus;
  for (std::size_t k = 1; k < congruences.size(); ++k) {
    const auto& [r, n] = congruences[k];
    // s*m + t*n == g with g a unit, so s*conj(g)*m == 1 mod n.
    ExtGcd e = ext_gcd(m, n);
    GInt lift = e.s * conj(e.g) * (r - x);
    x = x + m * lift;
    m = m * n;
    x = divrem(x, m).remainder;
  }
  CrtSolution out{divrem(x, m).remainder, canonical_associate(m)};
  out.x0 = divrem(x, out.modulus).remainder;
  for (const auto& c : congruences) {
    if (!congruent(out.x0, c.residue, c.modulus)) throw std::logic_error("gaussian_crt: solution check failed");
  }
  return out;
}

bool is_associate(const GInt& a, const GInt& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return canonical_associate(a) == canonical_associate(b);
}

Obstruction build_obstruction() {
  const std::vector<std::pair<Congruence, GInt>> table = {
      {{0, 2}, GInt(2, 1)},  {{0, 3}, GInt(2, 3)},   {{1, 4}, GInt(1, 2)},
      {{3, 8}, GInt(3, 0)},  {{7, 12}, GInt(3, 2)},  {{23, 24}, GInt(7, 0)},
  };
  Obstruction obs;
  CoveringSystem system;
  for (const auto& [c, pi] : table) {
    PrimeRecord p = make_prime_record(pi);
    unsigned long ord = order_dividing(p, c.modulus);
    if (ord != c.modulus) {
      throw VerificationFailure("order of 1+i modulo " + pi.str() + " is " + std::to_string(ord) + ", expected " +
                                std::to_string(c.modulus));
    }
    obs.pairs.push_back({c.residue, c.modulus, p});
    obs.exception_primes.push_back(p);
    obs.congruences.push_back(make_congruence(pow(kOnePlusI, c.residue), pi));
    system.push_back(c);
  }
  obs.congruences.push_back(make_congruence(GInt(1, 0), kOnePlusI));
  if (CoveringResult cov = verify_covering(system); !cov.covering) {
    throw VerificationFailure("residue system leaves " + std::to_string(*cov.witness) + " uncovered");
  }
  CrtSolution crt = gaussian_crt(obs.congruences);
  obs.x0 = crt.x0;
  obs.modulus = crt.modulus;
  return obs;
}

std::string modulus_discrepancy(const Obstruction& obs) {
  std::ostringstream out;
  out << "recomputed modulus " << obs.modulus << " (norm " << norm(obs.modulus) << ")";
  if (is_associate(obs.modulus, kPrintedModulus)) {
    out << " agrees with the printed " << kPrintedModulus;
  } else {
    out << " differs from the printed " << kPrintedModulus << " (norm " << norm(kPrintedModulus)
        << "), which is not an associate";
  }
  return out.str();
}

std::optional<std::size_t> covering_pair_for(const Obstruction& obs, unsigned long k) {
  for (std::size_t j = 0; j < obs.pairs.size(); ++j) {
    if (k % obs.pairs[j].modulus == obs.pairs[j].residue) return j;
  }
  return std::nullopt;
}

bool obstruction_divisibility_check(const Obstruction& obs, unsigned long k_max) {
  unsigned long lcm = 1;
  for (const auto& p : obs.pairs) lcm = std::lcm(lcm, p.modulus);
  if (k_max < lcm) throw std::invalid_argument("obstruction_divisibility_check: k_max below the lcm of the moduli");
  GInt power = kOnePlusI;
  for (unsigned long k = 1; k <= k_max; ++k, power *= kOnePlusI) {
    std::optional<std::size_t> j = covering_pair_for(obs, k);
    if (!j || !divides(obs.pairs[*j].prime.generator, obs.x0 - power)) return false;
  }
  return true;
}

unsigned long default_k_cap(const Obstruction& obs, double radius) {
  const double reach = radius + house(obs.x0);
  unsigned long k = 0;
  while (std::ldexp(1.0, static_cast<int>(k) + 1) <= reach * reach) ++k;
  return k + 24;
}

ObstructionScan scan_obstruction(const Obstruction& obs, double radius, std::optional<unsigned long> k_cap,
                                 unsigned threads) {
  if (!(radius >= 0) || mpz_class(static_cast<unsigned long>(norm_bound(radius))) < norm(obs.modulus)) {
    throw std::invalid_argument("scan_obstruction: radius must be at least house(M)");
  }
  ObstructionScan out;
  out.radius = radius;
  out.k_cap = k_cap.value_or(default_k_cap(obs, radius));
  std::vector<GInt> powers{kOnePlusI};
  while (powers.size() < out.k_cap) powers.push_back(powers.back() * kOnePlusI);

  const long t_max = class_box_half_width(obs, radius);
  threads = std::max(1u, threads);
  std::mutex merge;
  std::string failure;
  auto worker = [&](long a_lo, long a_hi) {
    ObstructionScan local;
    std::string local_failure;
    for_each_class_member(obs.x0, obs.modulus, radius, a_lo, a_hi, [&](const GInt& zeta) {
      ++local.members;
      if (norm(zeta) % 2 == 0) local.all_odd_norm = false;
      for (unsigned long k = 1; k <= out.k_cap; ++k) {
        GInt pi = zeta - powers[k - 1];
        if (!is_prime_element(pi)) continue;
        bool known = std::any_of(obs.exception_primes.begin(), obs.exception_primes.end(),
                                 [&](const PrimeRecord& p) { return is_associate(pi, p.generator); });
        if (!known && local_failure.empty()) {
          local_failure = zeta.str() + " = " + pi.str() + " + (1+i)^" + std::to_string(k) +
                          " with a prime outside the covering set";
        }
        local.exceptions.push_back({zeta, pi, k});
      }
    });
    std::lock_guard lock(merge);
    out.members += local.members;
    out.all_odd_norm = out.all_odd_norm && local.all_odd_norm;
    out.exceptions.insert(out.exceptions.end(), local.exceptions.begin(), local.exceptions.end());
    if (failure.empty()) failure = local_failure;
  };
  {
    std::vector<std::jthread> pool;
    const long rows = 2 * t_max + 1, chunk = (rows + threads - 1) / threads;
    for (long lo = -t_max; lo <= t_max; lo += chunk) pool.emplace_back(worker, lo, std::min(lo + chunk, t_max + 1));
  }
  if (!failure.empty()) throw VerificationFailure("scan_obstruction: " + failure);
  std::sort(out.exceptions.begin(), out.exceptions.end(), [](const auto& l, const auto& r) {
    if (!(l.zeta == r.zeta)) return NormOrder{}(l.zeta, r.zeta);
    return l.k < r.k;
  });
  return out;
}

std::uint64_t odd_norm_lattice_count(double x) {
  const auto bound = static_cast<std::int64_t>(norm_bound(x));
  const auto w = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(bound)));
  std::uint64_t count = 0;
  for (std::int64_t a = -w; a <= w; ++a) {
    // b in [-h, h]; norm is odd iff a + b is odd.
    const auto h = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(bound - a * a)));
    const std::int64_t span = 2 * h + 1;
    const bool a_odd = (a % 2) != 0;
    // Values of b in [-h, h] with parity opposite to a: even b count is 2*floor(h/2)+1.
    const std::int64_t evens = 2 * (h / 2) + 1;
    count += static_cast<std::uint64_t>(a_odd ? evens : span - evens);
  }
  return count;
}

ClassDensity class_density(const Obstruction& obs, double radius) {
  ClassDensity out;
  out.radius = radius;
  const long t_max = class_box_half_width(obs, radius);
  for_each_class_member(obs.x0, obs.modulus, radius, -t_max, t_max + 1, [&](const GInt&) { ++out.members; });
  out.odd_lattice = odd_norm_lattice_count(radius);
  out.lattice = lattice_count(radius);
  const double m = norm(obs.modulus).get_d();
  out.ratio_all = static_cast<double>(out.members) / static_cast<double>(out.lattice) * m;
  out.ratio_odd = static_cast<double>(out.members) / static_cast<double>(out.odd_lattice) * m / 2;
  return out;
}

}  // namespace gaussrom
