#pragma once

// Covering congruences over Z, the Chinese remainder theorem over Z[i], and
// the residue class x0 mod M none of whose members is a prime plus a power of
// 1+i except through the six fixed primes.

#include "gaussrom/gaussian_primes.hpp"
#include "gaussrom/gint.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussrom {

/// A check that must hold by construction failed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Congruence {
  unsigned long residue = 0;
  unsigned long modulus = 2;
};

using CoveringSystem = std::vector<Congruence>;

struct CoveringResult {
  bool covering = false;
  unsigned long lcm = 1;
  std::optional<unsigned long> witness;  // least uncovered residue
};

/// Exhaustive over [0, lcm). Throws std::invalid_argument for an empty system
/// or a modulus below 2, std::length_error if the lcm exceeds 2^32.
CoveringResult verify_covering(const CoveringSystem& system);

/// The system 0 mod 2, 0 mod 3, 1 mod 4, 3 mod 8, 7 mod 12, 23 mod 24.
CoveringSystem standard_covering();

struct GaussianCongruence {
  GInt residue;
  GInt modulus;
};

/// Reduces the residue by the modulus. Throws std::domain_error for modulus 0.
GaussianCongruence make_congruence(const GInt& residue, const GInt& modulus);

/// Raised by gaussian_crt; names the two offending congruences by index.
class NonCoprimeModuli : public std::invalid_argument {
 public:
  NonCoprimeModuli(std::size_t first, std::size_t second, const GInt& common);
  std::size_t first;
  std::size_t second;
};

struct CrtSolution {
  GInt x0;       // divrem remainder modulo `modulus`
  GInt modulus;  // canonical associate of the product of the moduli
};

/// Solves the system. Throws NonCoprimeModuli, or std::invalid_argument when
/// the list is empty.
CrtSolution gaussian_crt(const std::vector<GaussianCongruence>& congruences);

/// (a_j, m_j, pi_j): residues k == a_j mod m_j are killed by pi_j, because
/// 1+i has order exactly m_j modulo pi_j.
struct CoveringTriple {
  unsigned long residue;
  unsigned long modulus;
  PrimeRecord prime;
};

struct Obstruction {
  GInt x0;
  GInt modulus;                               // canonical
  std::vector<PrimeRecord> exception_primes;  // the six pi_j
  std::vector<CoveringTriple> pairs;
  std::vector<GaussianCongruence> congruences;  // the six prime ones, then 1 mod (1+i)
};

/// The modulus as printed in the source construction. It is not an associate
/// of the recomputed one; kept only so reports can show the discrepancy.
inline const GInt kPrintedModulus{990, 990};

bool is_associate(const GInt& a, const GInt& b);

/// Assembles and solves the seven congruences. Throws VerificationFailure if an
/// order differs from its modulus or the residue system fails to cover.
Obstruction build_obstruction();

/// One line comparing the recomputed modulus with kPrintedModulus.
std::string modulus_discrepancy(const Obstruction& obs);

/// Index of the first pair with k == a_j mod m_j, or nullopt.
std::optional<std::size_t> covering_pair_for(const Obstruction& obs, unsigned long k);

/// For every 1 <= k <= k_max, pi_j divides x0 - (1+i)^k for the covering
/// pair j of k. Throws std::invalid_argument if k_max is below the lcm.
bool obstruction_divisibility_check(const Obstruction& obs, unsigned long k_max);

struct ObstructionException {
  GInt zeta;
  GInt prime;  // zeta - (1+i)^k, an associate of some pi_j
  unsigned long k = 0;
};

struct ObstructionScan {
  double radius = 0;
  unsigned long k_cap = 0;
  std::uint64_t members = 0;  // class members with house <= radius
  bool all_odd_norm = true;
  std::vector<ObstructionException> exceptions;  // sorted by zeta, then k
};

/// Largest k with 2^k <= (B + house(x0))^2, plus the covering lcm 24.
unsigned long default_k_cap(const Obstruction& obs, double radius);

/// Every zeta == x0 mod M with house(zeta) <= radius, tested for zeta = pi + (1+i)^k
/// with 1 <= k <= k_cap. Throws std::invalid_argument unless radius >= house(M),
/// VerificationFailure if some pi is not an associate of a pi_j.
ObstructionScan scan_obstruction(const Obstruction& obs, double radius, std::optional<unsigned long> k_cap = {},
                                 unsigned threads = 1);

struct ClassDensity {
  double radius = 0;
  std::uint64_t members = 0;
  std::uint64_t lattice = 0;     // all zeta with house <= radius
  std::uint64_t odd_lattice = 0;  // those of odd norm
  double ratio_all = 0;           // members / lattice * norm(M); tends to 1
  double ratio_odd = 0;           // members / odd_lattice * norm(M) / 2; tends to 1
};

/// Counts the class by enumerating t in zeta = x0 + tM.
ClassDensity class_density(const Obstruction& obs, double radius);

/// #{zeta : norm(zeta) <= floor(x^2), norm odd}.
std::uint64_t odd_norm_lattice_count(double x);

}  // namespace gaussrom
