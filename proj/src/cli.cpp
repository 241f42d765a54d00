#include "aliquot/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "aliquot/error.hpp"

namespace aliquot::cli {

namespace {

using Job = std::function<ExperimentReport()>;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void require(bool ok, const char* parameter, const std::string& message) {
  if (!ok) throw ParameterError(parameter, message);
}

std::vector<u64> xs(const RunConfig& c) {
  require(!c.x.empty(), "x", "at least one --x is required");
  return c.x;
}

void check_gamma(double v, const char* name) { require(v > 0.0 && v < 1.0, name, "must lie in (0, 1)"); }

SieveConfig sieve_config(const RunConfig& c) {
  require(c.segment_size >= 1, "segment-size", "must be >= 1");
  return SieveConfig{.segment_size = c.segment_size, .threads = c.threads};
}

std::vector<Job> plan(const RunConfig& c) {
  const std::string& cmd = c.subcommand;
  const SieveConfig cfg = sieve_config(c);
  std::vector<Job> jobs;

  if (cmd == "preimage") {
    const DigitSet ds = DigitSet::parse(c.digits);
    check_gamma(c.gamma, "gamma");
    for (u64 x : xs(c)) {
      require(x >= 2 && x <= kMaxN, "x", "must lie in [2, 10^12]");
      jobs.push_back([=] { return to_report(preimage_count(x, ds, c.gamma, cfg)); });
    }
  } else if (cmd == "split") {
    const DigitSet ds = DigitSet::parse(c.digits);
    check_gamma(c.gamma, "gamma");
    const bool automatic = c.k == "auto";
    u64 fixed_k = 0;
    if (!automatic) {
      try {
        fixed_k = std::stoull(c.k);
      } catch (const std::exception&) {
        throw ParameterError("k", "expected a positive integer or 'auto', got '" + c.k + "'");
      }
      require(fixed_k >= 1 && fixed_k <= 1000, "k", "must lie in [1, 1000]");
    }
    for (u64 x : xs(c)) {
      require(x >= 3 && x <= kMaxN, "x", "must lie in [3, 10^12]");
      const u64 k = automatic ? choose_k(x, ds, c.gamma) : fixed_k;
      jobs.push_back([=] {
        auto rep = to_report(s1_s2_split(x, ds, k, cfg));
        rep.parameters["k_mode"] = automatic ? "auto" : "fixed";
        rep.parameters["gamma"] = c.gamma;
        return rep;
      });
    }
  } else if (cmd == "keylemma") {
    require(c.base >= 3, "base", "must be >= 3");
    check_gamma(c.gamma, "gamma");
    check_gamma(c.delta, "delta");
    u64 k = 0;
    try {
      k = std::stoull(c.k);
    } catch (const std::exception&) {
      throw ParameterError("k", "expected a positive integer, got '" + c.k + "'");
    }
    require(k >= 1, "k", "must be >= 1");
    const auto modulus = k > 64 ? std::nullopt : checked_pow(c.base, static_cast<unsigned>(k));
    require(modulus.has_value(), "k", "base^k exceeds 64-bit range");
    // phi(g^k) = g^(k-1) phi(g)
    const u64 phi = *modulus / c.base * totient(c.base);
    for (u64 x : xs(c)) {
      require(x >= 3 && x <= kMaxN, "x", "must lie in [3, 10^12]");
      jobs.push_back([=] {
        const u64 count = key_lemma_count(x, c.base, k, cfg);
        const BoundSuite b = bound_suite_with_phi(x, phi, c.gamma, c.delta);
        ExperimentReport rep;
        rep.experiment = "keylemma";
        rep.parameters = {{"x", x}, {"base", c.base}, {"k", k}, {"gamma", c.gamma}, {"delta", c.delta}};
        rep.results = {{"count", count},
                       {"modulus", *modulus},
                       {"phi_modulus", phi},
                       {"pollack", b.pollack},
                       {"key_lemma", b.key_lemma},
                       {"main", b.main}};
        return rep;
      });
    }
  } else if (cmd == "params") {
    const ScheduleInputs in{.alpha = c.alpha, .alpha_prime = c.alpha_prime, .gamma = c.gamma,
                            .delta = c.delta, .A = c.A};
    u64 k = 0;
    try {
      k = std::stoull(c.k);
    } catch (const std::exception&) {
      throw ParameterError("k", "expected a positive integer, got '" + c.k + "'");
    }
    std::vector<LogTower> towers;
    if (c.log_log_x) towers.push_back(LogTower::from_log_log(*c.log_log_x));
    if (!c.x.empty()) {
      for (u64 x : c.x) towers.push_back(LogTower::of(x));
    }
    require(!towers.empty(), "x", "one of --x or --loglogx is required");
    for (const auto& t : towers) {
      auto rep = to_report(key_lemma_params(t, c.base, k, in));  // validates
      jobs.push_back([rep] { return rep; });
    }
  } else if (cmd == "bounds") {
    for (u64 x : xs(c)) {
      auto b = bound_suite(x, c.q, c.gamma, c.delta);
      jobs.push_back([=] {
        ExperimentReport rep;
        rep.experiment = "bounds";
        rep.parameters = {{"x", x}, {"q", c.q}, {"gamma", c.gamma}, {"delta", c.delta}};
        rep.results = {{"pollack", b.pollack}, {"key_lemma", b.key_lemma}, {"main", b.main},
                       {"phi_q", b.phi_q}};
        return rep;
      });
    }
  } else if (cmd == "abdecomp") {
    require(!c.n.empty(), "n", "at least one --n is required");
    require(c.m >= 2, "m", "must be >= 2");
    for (u64 n : c.n) {
      require(n >= 1 && n <= kMaxN, "n", "must lie in [1, 10^12]");
      jobs.push_back([=] { return to_report(ab_decompose(n, c.m)); });
    }
  } else if (cmd == "omegastats") {
    require(c.epsilon > 0.0, "epsilon", "must be positive");
    for (u64 x : xs(c)) {
      require(x >= 100, "x", "must be >= 100");
      if (x > kMaxOmegaStatsX) throw ResourceError("omegastats x above the memory cap");
      jobs.push_back([=] { return to_report(omega_s_stats(x, c.epsilon, cfg)); });
    }
  } else if (cmd == "residue") {
    require(is_prime(c.p), "p", std::to_string(c.p) + " is not prime");
    for (u64 x : xs(c)) {
      require(x >= 4 && x <= kMaxN, "x", "must lie in [4, 10^12]");
      jobs.push_back([=] { return to_report(residue_counts(x, c.p, cfg)); });
    }
  } else if (cmd == "cofd") {
    const DigitSet ds = DigitSet::parse(c.digits);
    jobs.push_back([=] {
      const Rational r = c_of_D(ds);
      ExperimentReport rep;
      rep.experiment = "cofd";
      rep.parameters = {{"digits", ds.str()}};
      rep.results = {{"c_of_d", r.str()},
                     {"c_of_d_value", r.to_double()},
                     {"admissible_pairs", admissible_pair_count(ds)},
                     {"phi_g", totient(ds.base())}};
      return rep;
    });
  } else if (cmd == "goldbach") {
    const DigitSet ds = DigitSet::parse(c.digits);
    for (u64 x : xs(c)) {
      require(x >= 1 && x <= PrimeTable::kMaxLimit, "x", "must lie in [1, 2*10^9]");
      jobs.push_back([=] { return to_report(goldbach_count(x, ds, primes_up_to(x), cfg)); });
    }
  } else if (cmd == "ems") {
    const DigitSet ds = DigitSet::parse(c.digits);
    require(c.q >= 1, "q", "must be >= 1");
    for (u64 x : xs(c)) {
      jobs.push_back([=] { return to_report(ems_deviation(x, ds, c.q), ds); });
    }
  } else if (cmd == "count") {
    const DigitSet ds = DigitSet::parse(c.digits);
    const ClassQuery cq{.modulus = c.q, .residue = c.a.value_or(0)};
    cq.validate();
    const bool by_class = c.a.has_value();
    for (u64 x : xs(c)) {
      jobs.push_back([=] {
        ExperimentReport rep;
        rep.experiment = "count";
        rep.parameters = {{"x", x}, {"digits", ds.str()}};
        if (by_class) {
          rep.parameters["q"] = cq.modulus;
          rep.parameters["a"] = cq.residue;
          rep.results["count"] = count_in_class(x, ds, cq);
        } else {
          rep.results["count"] = count_up_to(x, ds);
        }
        return rep;
      });
    }
  } else if (cmd == "enumerate") {
    const DigitSet ds = DigitSet::parse(c.digits);
    for (u64 x : xs(c)) {
      require(count_up_to(x, ds) <= 10'000'000, "x", "more than 10^7 values to enumerate");
      jobs.push_back([=] {
        ExperimentReport rep;
        rep.experiment = "enumerate";
        rep.parameters = {{"x", x}, {"digits", ds.str()}};
        const auto values = enumerate(ds, x);
        rep.results = {{"count", values.size()}, {"values", values}};
        return rep;
      });
    }
  } else {
    throw ParameterError("subcommand", "unknown subcommand '" + cmd + "'");
  }
  return jobs;
}

std::filesystem::path resolve_output(const std::string& output) {
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

struct Subcommand {
  const char* name;
  const char* summary;
};

constexpr Subcommand kSubcommands[] = {
    {"preimage", "count n <= x whose aliquot sum s(n) has all base-g digits in D"},
    {"split", "split that count by whether g^k divides sigma(n); checks S1 <= |D|^k floor(x/g^k) + |D|^k"},
    {"keylemma", "count n <= x with g^k not dividing sigma(n), with the comparison bounds"},
    {"params", "evaluate the ell, t, m schedule used against g^k not dividing sigma(n)"},
    {"bounds", "x/(log x)^(1/phi(q)), x exp(-(log log x)^delta), x exp(-(log log x)^gamma)"},
    {"abdecomp", "unique n = ab, a squarefree with primes == -1 mod m, gcd(a, b) = 1"},
    {"omegastats", "omega(s(n)) versus log log s(n) over n <= x"},
    {"residue", "s(n) mod p over composite n <= x"},
    {"cofd", "constant c(D) = g/phi(g)^2 #{(b1,b2) coprime to g : b1+b2+1 mod g in D}"},
    {"goldbach", "ellipsephic n <= x with n-1 a sum of two primes, and the log-weighted count"},
    {"ems", "ellipsephic counts per residue class mod q, deviation from total/q"},
    {"count", "number of ellipsephic 1 <= n <= x, optionally with n == a (mod q)"},
    {"enumerate", "list ellipsephic 1 <= n <= x in increasing order"},
};

}  // namespace

std::vector<ExperimentReport> execute(const RunConfig& config) {
  const std::vector<Job> jobs = plan(config);
  std::vector<ExperimentReport> reports;
  reports.reserve(jobs.size());
  for (const auto& job : jobs) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport rep = job();
    const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
    if (config.provenance) {
      rep.provenance = Provenance{.tool_version = kToolVersion, .timestamp = utc_timestamp(),
                                  .wall_seconds = wall.count()};
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Aliquot sums and digit-restricted integers: counting experiments", "aliquot"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  bool no_provenance = false;

  for (const auto& sub : kSubcommands) {
    CLI::App* s = app.add_subcommand(sub.name, sub.summary);
    s->add_option("--x", config.x, "upper limit x (repeat for a grid)");
    s->add_option("--loglogx", config.log_log_x, "log log x, for x beyond 64 bits (params)");
    s->add_option("--digits", config.digits, "digit set, \"g=<int>;D=<d0>,<d1>,...\"");
    s->add_option("--base", config.base, "base g");
    s->add_option("--k", config.k, "exponent k, or 'auto' (split)");
    s->add_option("--q", config.q, "modulus q");
    s->add_option("--a", config.a, "residue a");
    s->add_option("--p", config.p, "prime modulus p (residue)");
    s->add_option("--n", config.n, "integer n (abdecomp; repeatable)");
    s->add_option("--m", config.m, "modulus m (abdecomp)");
    s->add_option("--gamma", config.gamma, "gamma in (0,1)");
    s->add_option("--delta", config.delta, "delta in (0,1)");
    s->add_option("--alpha", config.alpha, "alpha in (0,1)");
    s->add_option("--alpha-prime", config.alpha_prime, "alpha' in (0, alpha)");
    s->add_option("--A", config.A, "window constant A > 0");
    s->add_option("--epsilon", config.epsilon, "epsilon > 0 (omegastats)");
    s->add_option("--threads", config.threads, "worker threads (0 = all cores)");
    s->add_option("--segment-size", config.segment_size, "sieve segment length");
    s->add_option("--format", format, "json or csv");
    s->add_option("--output", config.output, "output file (default: standard output)");
    s->add_flag("--no-provenance", no_provenance, "omit timestamps and timings");
  }

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  if (!args.empty()) args.pop_back();  // program name
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    config.subcommand = app.get_subcommands().front()->get_name();
    config.format = parse_format(format);
    config.provenance = !no_provenance;
    const auto reports = execute(config);
    const std::string body = emit_reports(reports, config.format);
    if (config.output.empty()) {
      out << body;
    } else {
      const auto path = resolve_output(config.output);
      std::ofstream file(path, std::ios::binary);
      if (!file) throw ResourceError("cannot open output file " + path.string());
      file << body;
      err << "wrote " << reports.size() << " report(s) to " << path.string() << "\n";
    }
    return 0;
  } catch (const ParameterError& e) {
    err << "error: invalid parameter " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace aliquot::cli
