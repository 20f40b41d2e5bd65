#include "gaussrom/density.hpp"

#include "gaussrom/gaussian_primes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace gaussrom {

namespace {

struct Coord {
  std::int64_t re;
  std::int64_t im;
};

// Square grid [-w, w]^2 holding one byte per lattice point.
class DiskGrid {
 public:
  explicit DiskGrid(double x) : bound_(norm_bound(x)), w_(static_cast<std::int64_t>(std::floor(x))) {
    side_ = static_cast<std::size_t>(2 * w_ + 1);
    cells_.assign(side_ * side_, 0);
  }

  std::uint64_t bound() const { return bound_; }
  std::int64_t half_width() const { return w_; }

  bool inside(std::int64_t re, std::int64_t im) const {
    return static_cast<std::uint64_t>(re * re + im * im) <= bound_;
  }

  std::uint8_t& at(std::int64_t re, std::int64_t im) {
    return cells_[static_cast<std::size_t>(re + w_) * side_ + static_cast<std::size_t>(im + w_)];
  }
  std::uint8_t at(std::int64_t re, std::int64_t im) const {
    return cells_[static_cast<std::size_t>(re + w_) * side_ + static_cast<std::size_t>(im + w_)];
  }

 private:
  std::uint64_t bound_;
  std::int64_t w_;
  std::size_t side_ = 0;
  std::vector<std::uint8_t> cells_;
};

std::vector<Coord> one_plus_i_powers(unsigned k_max) {
  std::vector<Coord> out;
  Coord c{1, 0};
  for (unsigned k = 0; k <= k_max; ++k) {
    out.push_back(c);
    c = {c.re - c.im, c.re + c.im};
  }
  return out;
}

bool is_one_plus_i_associate(std::int64_t re, std::int64_t im) { return std::abs(re) == 1 && std::abs(im) == 1; }

// Totals over the disk from a grid of representation counts.
DensityReport summarise(double x, unsigned lmax, const DiskGrid& counts) {
  DensityReport rep;
  rep.x = x;
  rep.l_max = lmax;
  const std::int64_t w = counts.half_width();
  for (std::int64_t re = -w; re <= w; ++re) {
    for (std::int64_t im = -w; im <= w; ++im) {
      if (!counts.inside(re, im)) continue;
      ++rep.lattice;
      std::uint64_t r = counts.at(re, im);
      rep.sum_r += r;
      rep.sum_r2 += r * r;
      if (r > 0) {
        ++rep.sum_eta;
        if ((re + im) % 2 == 0) ++rep.even_norm_represented;
      }
    }
  }
  rep.eta_density = static_cast<double>(rep.sum_eta) / static_cast<double>(rep.lattice);
  if (rep.sum_r2 > 0) {
    rep.cs_bound = static_cast<double>(rep.sum_r) * static_cast<double>(rep.sum_r) /
                   (static_cast<double>(rep.sum_r2) * static_cast<double>(rep.lattice));
  }
  return rep;
}

template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 1024) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::jthread> pool;
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t lo = std::min(n, t * chunk), hi = std::min(n, lo + chunk);
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
}

std::vector<Coord> primes_in_disk_coords(double x) {
  std::vector<Coord> primes;
  for_each_prime_in_disk_i64(x, [&](std::int64_t re, std::int64_t im) { primes.push_back({re, im}); });
  return primes;
}

}  // namespace

bool DensityReport::cauchy_schwarz_holds() const {
  mpz_class lhs = mpz_class(static_cast<unsigned long>(sum_eta)) * static_cast<unsigned long>(sum_r2);
  mpz_class r = static_cast<unsigned long>(sum_r);
  return lhs >= r * r;
}

unsigned l_max(double x) {
  unsigned k = 0;
  while (std::ldexp(4.0, static_cast<int>(k) + 1) <= x) ++k;
  return k;
}

unsigned long r_x(const GInt& zeta, double x, bool include_k0) {
  if (!(x >= 4)) throw std::domain_error("r_x: x must be >= 4");
  const mpz_class bound(static_cast<unsigned long>(norm_bound(x)));
  const unsigned lmax = l_max(x);
  unsigned long count = 0;
  GInt power = include_k0 ? GInt(1, 0) : kOnePlusI;
  for (unsigned k = include_k0 ? 0 : 1; k <= lmax; ++k) {
    GInt pi = zeta - power;
    if (norm(pi) <= bound && is_prime_element(pi)) ++count;
    power *= kOnePlusI;
  }
  return count;
}

namespace {

struct ForwardGrid {
  DiskGrid counts;
  std::uint64_t parity_violations = 0;
};

ForwardGrid forward_generate(double x, const ScanOptions& options) {
  const unsigned lmax = l_max(x);
  const unsigned k_min = options.include_k0 ? 0 : 1;
  const std::vector<Coord> powers = one_plus_i_powers(lmax);
  const std::vector<Coord> primes = primes_in_disk_coords(x);
  ForwardGrid out{DiskGrid(x)};
  DiskGrid& counts = out.counts;
  std::atomic<std::uint64_t> violations{0};
  parallel_chunks(primes.size(), options.threads, [&](std::size_t lo, std::size_t hi) {
    std::uint64_t local_violations = 0;
    for (std::size_t n = lo; n < hi; ++n) {
      const Coord& pi = primes[n];
      const bool ramified = is_one_plus_i_associate(pi.re, pi.im);
      for (unsigned k = k_min; k <= lmax; ++k) {
        std::int64_t re = pi.re + powers[k].re, im = pi.im + powers[k].im;
        if (!counts.inside(re, im)) continue;
        std::atomic_ref<std::uint8_t>(counts.at(re, im)).fetch_add(1, std::memory_order_relaxed);
        if (k >= 2 && !ramified && (re + im) % 2 == 0) ++local_violations;
      }
    }
    violations += local_violations;
  });
  out.parity_violations = violations;
  return out;
}

}  // namespace

DensityReport density_scan(double x, const ScanOptions& options) {
  if (!(x >= 16)) throw std::domain_error("density_scan: x must be >= 16");
  ForwardGrid grid = forward_generate(x, options);
  DensityReport rep = summarise(x, l_max(x), grid.counts);
  rep.parity_violations = grid.parity_violations;
  return rep;
}

std::vector<RepresentationCount> forward_representations(double x, const ScanOptions& options) {
  if (!(x >= 4)) throw std::domain_error("forward_representations: x must be >= 4");
  ForwardGrid grid = forward_generate(x, options);
  std::vector<RepresentationCount> out;
  const std::int64_t w = grid.counts.half_width();
  for (std::int64_t re = -w; re <= w; ++re) {
    for (std::int64_t im = -w; im <= w; ++im) {
      if (grid.counts.inside(re, im) && grid.counts.at(re, im) > 0) out.push_back({re, im, grid.counts.at(re, im)});
    }
  }
  return out;
}

DensityReport density_scan_per_point(double x, const ScanOptions& options) {
  if (!(x >= 16)) throw std::domain_error("density_scan_per_point: x must be >= 16");
  DiskGrid counts(x);
  const std::int64_t w = counts.half_width();
  for (std::int64_t re = -w; re <= w; ++re) {
    for (std::int64_t im = -w; im <= w; ++im) {
      if (!counts.inside(re, im)) continue;
      counts.at(re, im) = static_cast<std::uint8_t>(r_x(GInt(re, im), x, options.include_k0));
    }
  }
  return summarise(x, l_max(x), counts);
}

std::uint64_t prime_pair_count(const GInt& zeta, double x, bool distinct) {
  if (!(x > 0) || norm(zeta) > mpz_class(static_cast<unsigned long>(std::floor(x)))) {
    throw std::invalid_argument("prime_pair_count: requires house(zeta) <= sqrt(x)");
  }
  const std::int64_t dre = zeta.re.get_si(), dim = zeta.im.get_si();
  if (distinct && dre == 0 && dim == 0) return 0;
  DiskGrid is_prime(x);
  const std::vector<Coord> primes = primes_in_disk_coords(x);
  for (const Coord& p : primes) is_prime.at(p.re, p.im) = 1;
  std::uint64_t count = 0;
  for (const Coord& p : primes) {
    std::int64_t re = p.re + dre, im = p.im + dim;
    if (is_prime.inside(re, im) && is_prime.at(re, im)) ++count;
  }
  return count;
}

std::vector<GInt> power_difference_samples(double x) {
  const unsigned lmax = l_max(x);
  std::vector<GInt> out;
  for (unsigned j = 2; j <= lmax; ++j) {
    for (unsigned i = 1; i < j; ++i) out.push_back(pow(kOnePlusI, j) - pow(kOnePlusI, i));
  }
  return out;
}

bool SieveReport::all_within() const {
  return std::all_of(samples.begin(), samples.end(), [](const SieveSample& s) { return s.within; });
}

SieveReport sieve_bound_check(double x, const std::vector<GInt>& samples) {
  SieveReport rep;
  rep.x = x;
  const double log_x = std::log(x);
  for (const GInt& zeta : samples) {
    SieveSample s;
    s.zeta = zeta;
    s.pairs = prime_pair_count(zeta, x, true);
    s.ratio = static_cast<double>(s.pairs) * log_x * log_x / (x * x);
    s.within = s.ratio <= kSieveConstant;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace gaussrom
