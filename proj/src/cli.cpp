#include "gaussrom/cli.hpp"

#include "gaussrom/acceptance.hpp"
#include "gaussrom/constants.hpp"
#include "gaussrom/covering.hpp"
#include "gaussrom/density.hpp"
#include "gaussrom/factor_cache.hpp"
#include "gaussrom/gaussian_primes.hpp"
#include "gaussrom/orders.hpp"
#include "gaussrom/romanov.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <sstream>

namespace gaussrom {

namespace {

using Json = nlohmann::ordered_json;

class InvalidRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  double x = 100;
  unsigned long emax = 24;
  double x0 = 200;
  double radius = 2000;
  std::optional<unsigned long> kcap;
  std::uint64_t effort = 1;
  std::string format;  // empty: the subcommand's own default
  std::string cache;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool include_k0 = false;
  double mass = 3.33018;
};

std::string exact(const mpz_class& v) { return v.get_str(); }
std::string exact(const mpq_class& v) { return v.get_str(); }

Json interval_json(const Interval& v) {
  return Json{{"value", v.mid()}, {"error", v.radius()}, {"lower", v.lo}, {"upper", v.hi}};
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  const RunConfig& cfg() const { return cfg_; }
  std::ostream& out() { return out_; }

  std::string format(const std::string& fallback, std::initializer_list<const char*> supported) const {
    std::string f = cfg_.format.empty() ? fallback : cfg_.format;
    for (const char* s : supported) {
      if (f == s) return f;
    }
    throw InvalidRequest("format '" + f + "' is not supported by this subcommand");
  }

  Effort effort() const { return Effort::scaled(cfg_.effort); }

  FactorCache* cache() {
    if (!cache_) {
      std::optional<std::filesystem::path> path;
      if (!cfg_.cache.empty()) path = cfg_.cache;
      if (!path) path = FactorCache::default_path();
      cache_ = path ? std::make_unique<FactorCache>(*path) : std::make_unique<FactorCache>();
    }
    return cache_.get();
  }

  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

 private:
  RunConfig cfg_;
  std::ostream& out_;
  std::unique_ptr<FactorCache> cache_;
};

int primes_list(Session& s) {
  std::string fmt = s.format("csv", {"json", "csv"});
  std::vector<GInt> primes = primes_in_disk(s.cfg().x);
  if (fmt == "csv") {
    s.out() << "re,im,norm,degree\n";
    for (const auto& p : primes) {
      const int degree = make_prime_record(p).degree;
      s.out() << p.re << ',' << p.im << ',' << norm(p) << ',' << degree << '\n';
    }
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& p : primes) list.push_back(p.str());
  s.emit({{"x", s.cfg().x}, {"count", std::to_string(primes.size())}, {"primes", list}});
  return kExitOk;
}

int primes_count(Session& s) {
  s.format("json", {"json"});
  const double x = s.cfg().x;
  Json j{{"x", x}, {"count", std::to_string(count_primes_in_disk(x))}, {"lattice", std::to_string(lattice_count(x))}};
  if (x >= 2) j["mitsui_ratio"] = mitsui_ratio(x);
  s.emit(j);
  return kExitOk;
}

int orders_table(Session& s) {
  std::string fmt = s.format("json", {"json", "csv"});
  OrderTable table(s.effort(), s.cache());
  table.prefetch(s.cfg().emax, s.cfg().threads);
  bool complete = true;
  Json rows = Json::array();
  std::ostringstream csv;
  csv << "e,prime,norm,complete\n";
  for (unsigned long e = 1; e <= s.cfg().emax; ++e) {
    OrderSet set = table.primes_of_order(e);
    complete = complete && set.complete;
    Json primes = Json::array();
    for (const auto& p : set.primes) {
      primes.push_back({{"prime", p.generator.str()}, {"norm", exact(p.norm)}});
      csv << e << ',' << p.generator << ',' << p.norm << ',' << (set.complete ? 1 : 0) << '\n';
    }
    rows.push_back({{"e", e}, {"complete", set.complete}, {"primes", primes}});
  }
  if (fmt == "csv") {
    s.out() << csv.str();
  } else {
    s.emit({{"emax", s.cfg().emax}, {"complete", complete}, {"orders", rows}, {"notes", table.notes()}});
  }
  return kExitOk;
}

int romanov_sum(Session& s) {
  std::string fmt = s.format("csv", {"json", "csv"});
  OrderTable table(s.effort(), s.cache());
  SumLedger ledger = build_ledger(table, s.cfg().emax, true, s.cfg().threads);
  if (fmt == "csv") {
    s.out() << ledger_csv(ledger);
    return kExitOk;
  }
  Json rows = Json::array();
  for (const auto& r : ledger.entries) {
    rows.push_back({{"e", r.e},
                    {"F", exact(r.mass_divides)},
                    {"G", exact(r.mass_exact)},
                    {"partial_S", exact(r.partial_sum)},
                    {"partial_S_approx", r.partial_sum.get_d()},
                    {"E", exact(r.cumulative)},
                    {"complete", r.complete}});
  }
  s.emit({{"emax", s.cfg().emax}, {"complete", ledger.complete()}, {"ledger", rows}});
  return kExitOk;
}

int romanov_tail(Session& s) {
  s.format("json", {"json"});
  const double x0 = s.cfg().x0, mass = s.cfg().mass;
  const double a = 3.997993, b = -7.503313, c = 3.5206, scale = 0.999749;
  s.emit({{"x0", x0},
          {"mass_at_x0", mass},
          {"a", a},
          {"b", b},
          {"c", c},
          {"scale", scale},
          {"tail", tail_bound_assembly(x0, mass, a, b, c, scale)},
          {"sharp_odd_square_product", odd_prime_square_product(static_cast<std::size_t>(x0) + 9)}});
  return kExitOk;
}

int density(Session& s) {
  s.format("json", {"json"});
  DensityReport r = density_scan(s.cfg().x, {s.cfg().include_k0, s.cfg().threads});
  const double log_x = std::log(r.x);
  s.emit({{"x", r.x},
          {"l_max", r.l_max},
          {"include_k0", s.cfg().include_k0},
          {"sum_r", std::to_string(r.sum_r)},
          {"sum_r2", std::to_string(r.sum_r2)},
          {"sum_eta", std::to_string(r.sum_eta)},
          {"lattice", std::to_string(r.lattice)},
          {"eta_density", r.eta_density},
          {"cs_bound", r.cs_bound},
          {"sum_r_over_x2", static_cast<double>(r.sum_r) / (r.x * r.x)},
          {"sum_r_log_x_over_x2", static_cast<double>(r.sum_r) * log_x / (r.x * r.x)},
          {"even_norm_represented", std::to_string(r.even_norm_represented)},
          {"parity_violations", std::to_string(r.parity_violations)},
          {"cauchy_schwarz", r.cauchy_schwarz_holds()}});
  return r.cauchy_schwarz_holds() && r.parity_violations == 0 ? kExitOk : kExitVerificationFailed;
}

int sieve(Session& s) {
  s.format("json", {"json"});
  SieveReport r = sieve_bound_check(s.cfg().x, power_difference_samples(s.cfg().x));
  Json samples = Json::array();
  for (const auto& sample : r.samples) {
    samples.push_back({{"zeta", sample.zeta.str()},
                       {"pairs", std::to_string(sample.pairs)},
                       {"ratio", sample.ratio},
                       {"within", sample.within}});
  }
  // Exceedances are informational: the bound is asymptotic.
  s.emit({{"x", r.x}, {"kappa", kSieveConstant}, {"all_within", r.all_within()}, {"samples", samples}});
  return kExitOk;
}

int covering_verify(Session& s) {
  CoveringResult r = verify_covering(standard_covering());
  s.out() << "covering: " << (r.covering ? "true" : "false") << ", lcm=" << r.lcm;
  if (r.witness) s.out() << ", uncovered=" << *r.witness;
  s.out() << '\n';
  return r.covering ? kExitOk : kExitVerificationFailed;
}

int covering_obstruction(Session& s) {
  s.format("json", {"json"});
  Obstruction obs = build_obstruction();
  Json pairs = Json::array();
  for (const auto& p : obs.pairs) {
    pairs.push_back({{"residue", p.residue}, {"modulus", p.modulus}, {"prime", p.prime.generator.str()}});
  }
  Json congruences = Json::array();
  for (const auto& c : obs.congruences) congruences.push_back({{"residue", c.residue.str()}, {"modulus", c.modulus.str()}});
  const bool divisibility = obstruction_divisibility_check(obs, 48);
  ObstructionScan scan = scan_obstruction(obs, s.cfg().radius, s.cfg().kcap, s.cfg().threads);
  Json exceptions = Json::array();
  for (const auto& e : scan.exceptions) {
    exceptions.push_back({{"zeta", e.zeta.str()}, {"prime", e.prime.str()}, {"k", e.k}});
  }
  s.emit({{"x0", obs.x0.str()},
          {"M", obs.modulus.str()},
          {"norm_M", exact(norm(obs.modulus))},
          {"printed_M", kPrintedModulus.str()},
          {"modulus_note", modulus_discrepancy(obs)},
          {"pairs", pairs},
          {"congruences", congruences},
          {"divisibility_k48", divisibility},
          {"scan",
           {{"radius", scan.radius},
            {"k_cap", scan.k_cap},
            {"members", std::to_string(scan.members)},
            {"all_odd_norm", scan.all_odd_norm},
            {"exceptions", exceptions}}}});
  return divisibility && scan.all_odd_norm ? kExitOk : kExitVerificationFailed;
}

int constants_report(Session& s) {
  s.format("json", {"json"});
  ConstantsReport r = assemble_density_bound(1.27095, 0.57749);
  s.emit({{"L_chi1_2", interval_json(r.l_trivial)},
          {"catalan", interval_json(r.catalan)},
          {"l_product_inverse", interval_json(r.l_product)},
          {"kappa", interval_json(r.kappa)},
          {"c1", interval_json(r.c1)},
          {"c2", interval_json(r.c2)},
          {"c3", interval_json(r.c3)},
          {"c_tilde1", interval_json(r.c_tilde1)},
          {"c_tilde2", interval_json(r.c_tilde2)},
          {"c_tilde3", interval_json(r.c_tilde3)},
          {"c_tilde4", interval_json(r.c_tilde4)},
          {"final_bound", interval_json(r.final_bound)}});
  return kExitOk;
}

int verify_all(Session& s) {
  AcceptanceOptions opt;
  opt.threads = s.cfg().threads;
  opt.effort = s.effort();
  opt.cache = s.cache();
  bool all = true;
  run_acceptance(opt, [&](const CriterionResult& r) {
    s.out() << format_result(r) << std::endl;
    all = all && r.passed;
  });
  s.out() << (all ? "all criteria passed" : "some criteria failed") << '\n';
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian-integer Romanov and covering computations", "gaussrom"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--effort", cfg.effort, "Factorization budget multiplier (operation counts)")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000}))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format (json or csv; default depends on subcommand)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", cfg.cache, "Factorization cache file (default: $GAUSSROM_CACHE, else in memory)");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--seed", cfg.seed, "Reserved for randomized checks; every current subcommand is deterministic")->capture_default_str();

  std::function<int(Session&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*fn)(Session&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto add_emax = [&](CLI::App* sub) {
    sub->add_option("--emax", cfg.emax, "Largest exponent")->check(CLI::Range(1UL, 100000UL))->capture_default_str();
  };

  CLI::App* primes = app.add_subcommand("primes", "Prime elements of Z[i] in a disk");
  primes->require_subcommand(1);
  CLI::App* list = leaf(primes, "list", "List prime elements with house <= x", primes_list);
  list->add_option("--x", cfg.x, "House radius")->check(CLI::Range(0.0, 1e4))->capture_default_str();
  CLI::App* count = leaf(primes, "count", "Count prime elements with house <= x", primes_count);
  count->add_option("--x", cfg.x, "House radius")->check(CLI::Range(0.0, 1e5))->capture_default_str();

  CLI::App* orders = app.add_subcommand("orders", "Multiplicative orders of 1+i");
  orders->require_subcommand(1);
  add_emax(leaf(orders, "table", "Prime ideals grouped by the order of 1+i", orders_table));

  CLI::App* romanov = app.add_subcommand("romanov", "Romanov series over Z[i]");
  romanov->require_subcommand(1);
  add_emax(leaf(romanov, "sum", "Exact partial sums (lower bounds past incomplete factorizations)", romanov_sum));
  CLI::App* tail = leaf(romanov, "tail", "Closed-form tail estimate", romanov_tail);
  tail->add_option("--x0", cfg.x0, "Cut-off exponent")->check(CLI::Range(2.0, 1e9))->capture_default_str();
  tail->add_option("--mass", cfg.mass, "Cumulative mass E(x0)")->check(CLI::NonNegativeNumber)->capture_default_str();

  CLI::App* density_cmd = app.add_subcommand("density", "Representation density");
  density_cmd->require_subcommand(1);
  CLI::App* scan = leaf(density_cmd, "scan", "Sums of r_x and eta_x over the disk", density);
  scan->add_option("--x", cfg.x, "House radius")->check(CLI::Range(16.0, 2e4))->capture_default_str();
  scan->add_flag("--include-k0", cfg.include_k0, "Also allow k = 0");

  CLI::App* sieve_cmd = app.add_subcommand("sieve", "Prime pair counts");
  sieve_cmd->require_subcommand(1);
  CLI::App* check = leaf(sieve_cmd, "check", "Pair counts for differences of powers of 1+i", sieve);
  check->add_option("--x", cfg.x, "House radius")->check(CLI::Range(16.0, 2e4))->capture_default_str();

  CLI::App* covering = app.add_subcommand("covering", "Covering congruences and the obstruction class");
  covering->require_subcommand(1);
  leaf(covering, "verify", "Check the six-congruence covering system", covering_verify);
  CLI::App* obstruction = leaf(covering, "obstruction", "Build and scan the obstruction class", covering_obstruction);
  obstruction->alias("build-obstruction");
  obstruction->add_option("--radius,--scan-radius", cfg.radius, "Scan radius B")
      ->check(CLI::Range(0.0, 1e6))
      ->capture_default_str();
  obstruction->add_option("--kcap", cfg.kcap, "Largest power of 1+i tried (default: derived from the radius)");

  CLI::App* constants = app.add_subcommand("constants", "Analytic constants");
  constants->require_subcommand(1);
  leaf(constants, "report", "Certified constants and the assembled density bound", constants_report);

  CLI::App* verify = app.add_subcommand("verify", "Acceptance suite");
  verify->require_subcommand(1);
  leaf(verify, "all", "Run every acceptance criterion", verify_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  if (!action) {
    err << "no subcommand selected\n";
    return kExitInvalid;
  }
  Session session(cfg, out);
  try {
    return action(session);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const IncompleteFactorization& e) {
    err << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace gaussrom
