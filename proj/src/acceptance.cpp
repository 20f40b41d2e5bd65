#include "gaussrom/acceptance.hpp"

#include "gaussrom/constants.hpp"
#include "gaussrom/covering.hpp"
#include "gaussrom/density.hpp"
#include "gaussrom/gaussian_primes.hpp"
#include "gaussrom/orders.hpp"
#include "gaussrom/romanov.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gaussrom {

namespace {

using Check = bool (*)(const AcceptanceOptions&, std::ostringstream&);

struct Criterion {
  const char* name;
  double budget_seconds;
  Check check;
};

bool covering_system(const AcceptanceOptions&, std::ostringstream& detail) {
  CoveringResult r = verify_covering(standard_covering());
  detail << "covering=" << std::boolalpha << r.covering << ", lcm=" << r.lcm;
  return r.covering && r.lcm == 24;
}

bool order_table(const AcceptanceOptions& opt, std::ostringstream& detail) {
  const std::vector<std::pair<GInt, long>> expected = {
      {GInt(2, 1), 2}, {GInt(2, 3), 3}, {GInt(1, 2), 4}, {GInt(3, 0), 8}, {GInt(3, 2), 12}, {GInt(7, 0), 24},
  };
  bool ok = true;
  for (const auto& [pi, order] : expected) {
    mpz_class got = ord_one_plus_i(make_prime_record(pi), opt.effort);
    detail << pi << "->" << got << ' ';
    ok = ok && got == order;
  }
  return ok;
}

bool romanov_oracle(const AcceptanceOptions& opt, std::ostringstream& detail) {
  OrderTable table(opt.effort, opt.cache);
  unsigned long mismatches = 0;
  for (unsigned long e = 1; e <= 24; ++e) {
    if (mass_order_exactly(table, e) != mass_order_exactly_by_subsets(table, e)) ++mismatches;
  }
  mpq_class s4 = romanov_partial_sum(table, 4);
  detail << "G mismatches for e<=24: " << mismatches << ", S(4)=" << s4;
  return mismatches == 0 && s4 == mpq_class(1156, 975);
}

bool romanov_head(const AcceptanceOptions& opt, std::ostringstream& detail) {
  OrderTable table(opt.effort, opt.cache);
  SumLedger ledger = build_ledger(table, opt.romanov_e_max, true, opt.threads);
  const mpq_class ceiling(127095, 100000);
  bool ok = true;
  mpq_class previous = 0;
  unsigned long complete_up_to = 0;
  for (const auto& row : ledger.entries) {
    if (!row.complete) break;
    complete_up_to = row.e;
    ok = ok && row.partial_sum < ceiling && row.partial_sum >= previous;
    previous = row.partial_sum;
  }
  detail << "complete through E=" << complete_up_to << " of " << opt.romanov_e_max << ", S(" << complete_up_to
         << ")~" << std::setprecision(8) << previous.get_d() << " < 1.27095";
  return ok && complete_up_to > 0;
}

bool tail_arithmetic(const AcceptanceOptions&, std::ostringstream& detail) {
  double t = tail_bound_assembly(200, 3.33018, 3.997993, -7.503313, 3.5206, 0.999749);
  detail << std::setprecision(8) << "tail=" << t << " in [0.5773, 0.5777]";
  return t >= 0.5773 && t <= 0.5777;
}

bool odd_prime_index(const AcceptanceOptions&, std::ostringstream& detail) {
  std::uint64_t p = nth_odd_prime(209);
  detail << "p_209=" << p;
  return p == 1291;
}

// Union of canonical prime divisors of (1+i)^k - 1, ceil(x/2) <= k <= x.
std::size_t brute_force_prime_count(unsigned long x, const Effort& effort) {
  std::set<GInt, NormOrder> primes;
  for (unsigned long k = (x + 1) / 2; k <= x; ++k) {
    GaussianFactorization f = gaussian_prime_divisors(power_minus_one(k), effort);
    if (!f.complete) throw std::runtime_error("brute-force oracle could not factor (1+i)^k - 1");
    for (const auto& factor : f.factors) primes.insert(factor.prime.generator);
  }
  return primes.size();
}

bool prime_factor_count(const AcceptanceOptions& opt, std::ostringstream& detail) {
  OrderTable table(opt.effort, opt.cache);
  bool ok = true;
  for (auto [x, expected] : {std::pair{4UL, 3UL}, std::pair{8UL, 6UL}}) {
    DistinctPrimeCount c = distinct_prime_factor_count(table, x);
    std::size_t oracle = brute_force_prime_count(x, opt.effort);
    detail << "x=" << x << ": " << c.count << " (oracle " << oracle << ") ";
    ok = ok && c.complete && c.count == expected && oracle == expected;
  }
  return ok;
}

bool l_value_bound(const AcceptanceOptions&, std::ostringstream& detail) {
  Interval b = l_product_bound();
  detail << std::setprecision(10) << "bound in " << b;
  return b.lo >= 0.88492 && b.lo >= 0.884925 - 1e-5 && b.hi <= 0.884925 + 1e-5;
}

bool constant_assembly(const AcceptanceOptions&, std::ostringstream& detail) {
  Interval f = assemble_density_bound(1.27095, 0.57749).final_bound;
  detail << std::setprecision(10) << "final_bound in " << f;
  return f.lo >= 0.00110183 - 2e-7 && f.hi <= 0.00110183 + 2e-7;
}

bool prime_counts(const AcceptanceOptions&, std::ostringstream& detail) {
  std::uint64_t exhaustive_primes = 0, exhaustive_lattice = 0;
  for (long a = -10; a <= 10; ++a) {
    for (long b = -10; b <= 10; ++b) {
      if (a * a + b * b > 100) continue;
      ++exhaustive_lattice;
      if (is_prime_element(GInt(a, b))) ++exhaustive_primes;
    }
  }
  std::size_t listed = primes_in_disk(10).size();
  std::uint64_t lattice = lattice_count(10);
  double ratio = mitsui_ratio(3000);
  detail << "primes(10)=" << listed << " (oracle " << exhaustive_primes << "), lattice(10)=" << lattice
         << " (oracle " << exhaustive_lattice << "), mitsui(3000)=" << std::setprecision(6) << ratio;
  return listed == 100 && exhaustive_primes == 100 && lattice == 317 && exhaustive_lattice == 317 && ratio >= 0.8 &&
         ratio <= 1.2;
}

bool density_scan_criterion(const AcceptanceOptions& opt, std::ostringstream& detail) {
  DensityReport rep = density_scan(500, {false, opt.threads});
  std::map<std::pair<std::int64_t, std::int64_t>, unsigned> forward;
  for (const auto& r : forward_representations(64)) forward[{r.re, r.im}] = r.count;
  std::uint64_t disagreements = 0;
  for (long a = -64; a <= 64; ++a) {
    for (long b = -64; b <= 64; ++b) {
      if (a * a + b * b > 64 * 64) continue;
      auto it = forward.find({a, b});
      unsigned fwd = it == forward.end() ? 0 : it->second;
      if (fwd != r_x(GInt(a, b), 64)) ++disagreements;
    }
  }
  detail << "sum_r=" << rep.sum_r << " sum_r2=" << rep.sum_r2 << " sum_eta=" << rep.sum_eta
         << " eta_density=" << std::setprecision(6) << rep.eta_density << " forward/oracle disagreements at x=64: "
         << disagreements;
  return rep.cauchy_schwarz_holds() && rep.eta_density >= 0.00110183 && rep.eta_density <= 0.55 &&
         disagreements == 0;
}

bool sieve_corridor(const AcceptanceOptions&, std::ostringstream& detail) {
  SieveReport rep = sieve_bound_check(500, power_difference_samples(500));
  double worst = 0;
  for (const auto& s : rep.samples) worst = std::max(worst, s.ratio);
  detail << rep.samples.size() << " samples, max ratio " << std::setprecision(6) << worst << " <= " << kSieveConstant;
  return !rep.samples.empty() && rep.all_within();
}

bool obstruction(const AcceptanceOptions& opt, std::ostringstream& detail) {
  Obstruction obs = build_obstruction();
  bool divisibility = obstruction_divisibility_check(obs, 48);
  ObstructionScan scan = scan_obstruction(obs, 2000, std::nullopt, opt.threads);
  bool modulus_ok = is_associate(obs.modulus, GInt(1365, 1365));
  detail << "x0=" << obs.x0 << ", divisibility(48)=" << std::boolalpha << divisibility << ", scan: " << scan.members
         << " members, " << scan.exceptions.size() << " exceptional representations (k_cap " << scan.k_cap << "); "
         << modulus_discrepancy(obs);
  return divisibility && scan.all_odd_norm && modulus_ok;
}

bool geometry(const AcceptanceOptions&, std::ostringstream& detail) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  // Lens = 4 * integral over [d/2, x] of sqrt(x^2 - t^2), at x = d = 1.
  double quadrature = 4 * integrator.integrate([](double t) { return std::sqrt(std::max(0.0, 1 - t * t)); }, 0.5, 1.0);
  double exact = 2 * std::numbers::pi / 3 - std::sqrt(3.0) / 2;
  double area = circle_intersection_area(1, 1);
  bool ok = std::fabs(area - quadrature) <= 1e-9 && std::fabs(area - exact) <= 1e-9;
  detail << std::setprecision(12) << "area(1,1)=" << area << " quadrature=" << quadrature << "; deficits";
  for (double x : {100.0, 400.0, 1600.0}) {
    double deficit = std::numbers::pi * x * x - circle_intersection_area(x, std::sqrt(x));
    double allowance = 2 * std::pow(x, 1.5);
    detail << ' ' << std::setprecision(6) << deficit << "<=" << allowance;
    ok = ok && deficit <= allowance;
  }
  return ok;
}

// 2^{k/2} cos(k pi/4), an integer for every k >= 0.
mpz_class cosine_term(unsigned long k) {
  const mpz_class half = mpz_class(1) << (k / 2);
  const mpz_class odd_half = mpz_class(1) << ((k - 1) / 2);
  switch (k % 8) {
    case 0: return half;
    case 1: return odd_half;
    case 2: return 0;
    case 3: return -odd_half;
    case 4: return -half;
    case 5: return -odd_half;
    case 6: return 0;
    default: return odd_half;
  }
}

bool norm_house(const AcceptanceOptions&, std::ostringstream& detail) {
  bool bounded = true, closed_form = true;
  for (unsigned long k = 1; k <= 64; ++k) {
    mpz_class n = norm(power_minus_one(k));
    mpz_class two_k = mpz_class(1) << k;
    bounded = bounded && n <= 12 * two_k;
    // norm = 2^k - 2^{k/2+1} cos(k pi/4) + 1.
    closed_form = closed_form && n == two_k - 2 * cosine_term(k) + 1;
    double approx = std::ldexp(1.0, static_cast<int>(k)) -
                    2 * std::pow(2.0, k / 2.0) * std::cos(static_cast<double>(k) * std::numbers::pi / 4) + 1;
    closed_form = closed_form && std::fabs(approx - n.get_d()) <= 1e-9 * n.get_d() + 1e-6;
  }
  detail << "bound " << (bounded ? "holds" : "fails") << ", closed form " << (closed_form ? "holds" : "fails")
         << " for 1<=k<=64";
  return bounded && closed_form;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {"covering system", 1e-3, covering_system},
      {"order table", 1, order_table},
      {"romanov series oracle", 10, romanov_oracle},
      {"romanov head bound", 600, romanov_head},
      {"tail arithmetic", 1e-3, tail_arithmetic},
      {"odd prime index", 1e-2, odd_prime_index},
      {"prime factor count", 1, prime_factor_count},
      {"l-value bound", 1, l_value_bound},
      {"constant assembly", 1e-3, constant_assembly},
      {"prime counts", 30, prime_counts},
      {"density scan", 120, density_scan_criterion},
      {"sieve corridor", 300, sieve_corridor},
      {"obstruction", 300, obstruction},
      {"geometry", 10, geometry},
      {"norm-house inequality", 1, norm_house},
  };
  return table;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult result;
  result.id = id;
  result.name = c.name;
  result.budget_seconds = c.budget_seconds;
  std::ostringstream detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = c.check(options, detail);
  } catch (const std::exception& e) {
    detail << " exception: " << e.what();
  }
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.detail = detail.str();
  result.passed = ok && result.elapsed_seconds <= result.budget_seconds;
  if (ok && !result.passed) result.detail += " [over time budget]";
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << std::setfill('0') << r.id << std::setfill(' ') << ' '
      << r.name << ": " << r.detail << " (" << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s, budget "
      << std::defaultfloat << r.budget_seconds << " s)";
  return out.str();
}

}  // namespace gaussrom
