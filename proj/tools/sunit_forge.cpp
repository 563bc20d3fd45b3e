// sunit-forge: batch driver for the S-unit constructions.
//
// Subcommands
//   construct-thm1   level sets, collision census, popular ratio, S assembly
//   construct-thm2   moduli, progression sieve, popular m, N assembly
//   oracle           brute-force a+b=c / a+1=c / d(d+1)|N scans
//   params           exponent-calculus verdicts and optima as JSON
//   run              dispatch on the mode key of a config file
//
// Exit codes: 0 success, 1 usage or config error, 2 infeasible parameters,
// 3 internal verification failure, 4 empty census.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sunit/sunit.hpp"

namespace {

using namespace sunit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerification = 3;
constexpr int kExitEmptyCensus = 4;

struct CommonFlags {
  std::string config_file;
  std::string json_override;
  std::optional<std::uint64_t> y, K, cap, seed, H;
  std::optional<double> beta, gamma, alpha, C;
  std::optional<std::string> X, S, N, bound, out, cache;
};

ExperimentConfig build_config(const CommonFlags& f, const std::string& mode) {
  ExperimentConfig cfg;
  if (!f.config_file.empty()) cfg.merge_file(f.config_file);
  if (!f.json_override.empty()) cfg.merge_json(f.json_override);
  cfg.set("mode", mode);
  if (f.y) cfg.set("y", std::to_string(*f.y));
  if (f.K) cfg.set("K", std::to_string(*f.K));
  if (f.cap) cfg.set("cap", std::to_string(*f.cap));
  if (f.seed) cfg.set("seed", std::to_string(*f.seed));
  if (f.H) cfg.set("H", std::to_string(*f.H));
  if (f.beta) cfg.set("beta", std::to_string(*f.beta));
  if (f.gamma) cfg.set("gamma", std::to_string(*f.gamma));
  if (f.alpha) cfg.set("alpha", std::to_string(*f.alpha));
  if (f.C) cfg.set("C", std::to_string(*f.C));
  if (f.X) cfg.set("X", *f.X);
  if (f.S) cfg.set("S", *f.S);
  if (f.N) cfg.set("N", *f.N);
  if (f.bound) cfg.set("bound", *f.bound);
  if (f.out) cfg.set("out", *f.out);
  if (f.cache) cfg.set("cache", *f.cache);
  return cfg;
}

std::optional<std::filesystem::path> cache_dir(const ExperimentConfig& cfg) {
  if (auto c = cfg.get("cache")) return std::filesystem::path(*c);
  if (const char* env = std::getenv("SUNIT_FORGE_CACHE")) {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

std::filesystem::path out_dir(const ExperimentConfig& cfg) {
  return std::filesystem::path(cfg.get("out").value_or("out"));
}

void warm_prime_cache(const ExperimentConfig& cfg) {
  if (auto dir = cache_dir(cfg)) {
    const std::uint64_t limit = cfg.get_u64("cache_limit", kDefaultTrialBound);
    const auto primes = cached_primes(limit, dir);
    std::cerr << "prime cache: " << primes.size() << " primes <= " << limit
              << " under " << dir->string() << "\n";
  }
}

int status_to_exit(RunStatus status) {
  switch (status) {
    case RunStatus::ok: return kExitOk;
    case RunStatus::infeasible_params: return kExitInfeasible;
    case RunStatus::empty_census: return kExitEmptyCensus;
  }
  return kExitUsage;
}

int run_thm1_mode(const ExperimentConfig& cfg) {
  warm_prime_cache(cfg);
  Thm1Inputs in;
  in.y = cfg.require_u64("y");
  in.beta = cfg.require_double("beta");
  in.gamma = cfg.require_double("gamma");
  in.cap_l = cfg.optional_u64("cap_l");
  in.cap_m = cfg.optional_u64("cap_m");
  if (!in.cap_l) in.cap_l = cfg.optional_u64("cap");
  if (!in.cap_m) in.cap_m = cfg.optional_u64("cap");
  in.seed = cfg.get_u64("seed", kDefaultSeed);

  const auto t0 = std::chrono::steady_clock::now();
  const Thm1Report report = run_thm1(in);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

  const auto dir = out_dir(cfg);
  write_thm1_artifacts(report, dir);
  std::cout << "thm1: status=" << to_string(report.status);
  if (report.status == RunStatus::ok) {
    std::cout << " |L|=" << report.l_size << " |M|=" << report.m_size
              << " collisions=" << report.collision_count
              << " u*=" << report.u_star << " v*=" << report.v_star
              << " solutions=" << report.solutions.size()
              << " s=" << report.S.size()
              << " log(exp(s^beta))=" << report.log_target()
              << " log(exp(4s+6))=" << report.log_evertse();
  } else {
    std::cout << " (" << report.message << ")";
  }
  std::cout << "\nartifacts: " << dir.string() << " (" << ms << " ms)\n";
  return status_to_exit(report.status);
}

int run_thm2_mode(const ExperimentConfig& cfg) {
  warm_prime_cache(cfg);
  Thm2Inputs in;
  in.y = cfg.require_u64("y");
  in.K = cfg.require_u64("K");
  in.X = cfg.require_natural("X");
  in.cap = cfg.optional_u64("cap");
  in.seed = cfg.get_u64("seed", kDefaultSeed);

  const auto t0 = std::chrono::steady_clock::now();
  const Thm2Report report = run_thm2(in);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

  const auto dir = out_dir(cfg);
  write_thm2_artifacts(report, dir);
  std::cout << "thm2: status=" << to_string(report.status);
  if (report.status == RunStatus::ok) {
    std::cout << " moduli=" << report.moduli_count << " hits=" << report.hit_count
              << " m*=" << report.m_star << " |d|=" << report.d_list.size()
              << " logN=" << report.log_n
              << " log(exp((logN)^(1/16)))=" << report.log_benchmark();
  } else {
    std::cout << " (" << report.message << ")";
  }
  std::cout << "\nartifacts: " << dir.string() << " (" << ms << " ms)\n";
  return status_to_exit(report.status);
}

int run_oracle_mode(const ExperimentConfig& cfg) {
  OracleRun run;
  run.S = PrimeSet(cfg.require_u64_list("S"));
  run.H = cfg.require_natural("H");
  run.abc = count_abc(run.S, run.H);
  run.a1c = count_a1c(run.S, run.H);
  if (cfg.has("N")) {
    run.divisor_n = cfg.require_natural("N");
    run.divisor_bound =
        cfg.has("bound") ? cfg.require_natural("bound") : *run.divisor_n;
    run.divisors = consecutive_divisor_count(*run.divisor_n, *run.divisor_bound);
  }
  const auto dir = out_dir(cfg);
  write_oracle_artifacts(run, dir);
  std::cout << "oracle: |S|=" << run.S.size() << " H=" << run.H
            << " abc=" << run.abc.size() << " a1c=" << run.a1c.size();
  if (run.divisor_n) {
    std::cout << " d(d+1)|N hits=" << run.divisors.size();
  }
  std::cout << "\nartifacts: " << dir.string() << "\n";
  return kExitOk;
}

int run_params_mode(const ExperimentConfig& cfg) {
  const double C = cfg.get_double("C", 12.0 / 5.0);
  std::optional<double> beta, gamma, alpha;
  if (cfg.has("beta")) beta = cfg.require_double("beta");
  if (cfg.has("gamma")) gamma = cfg.require_double("gamma");
  if (cfg.has("alpha")) alpha = cfg.require_double("alpha");
  const Json j = params_report_json(C, beta, gamma, alpha);
  std::cout << j.dump(2) << "\n";
  if (cfg.has("out")) {
    const auto dir = out_dir(cfg);
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / "params.json", std::ios::trunc | std::ios::binary);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

int dispatch(const ExperimentConfig& cfg) {
  const std::string mode = cfg.require("mode");
  if (mode == "thm1") return run_thm1_mode(cfg);
  if (mode == "thm2") return run_thm2_mode(cfg);
  if (mode == "oracle") return run_oracle_mode(cfg);
  if (mode == "params") return run_params_mode(cfg);
  throw std::invalid_argument("config: unknown mode '" + mode + "'");
}

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_file, "key=value config file");
  cmd->add_option("--json", f.json_override, "JSON object merged over the config");
  cmd->add_option("--out", f.out, "output directory (default: out)");
  cmd->add_option("--cache", f.cache, "prime table cache directory");
  cmd->add_option("--seed", f.seed, "sampling seed (default 1729)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructions that force many S-unit and consecutive-divisor solutions"};
  app.require_subcommand(1);

  CommonFlags f1, f2, fo, fp, fr;

  auto* thm1 = app.add_subcommand("construct-thm1",
                                  "a+b=c solutions from residue collisions");
  add_common_flags(thm1, f1);
  thm1->add_option("--y", f1.y, "interval parameter y");
  thm1->add_option("--beta", f1.beta, "exponent beta in (0,1)");
  thm1->add_option("--gamma", f1.gamma, "exponent gamma in (0,1)");
  thm1->add_option("--cap", f1.cap, "sample cap for both level sets");

  auto* thm2 = app.add_subcommand("construct-thm2",
                                  "consecutive divisors from smooth progressions");
  add_common_flags(thm2, f2);
  thm2->add_option("--y", f2.y, "smoothness bound y");
  thm2->add_option("--K", f2.K, "prime factors per modulus");
  thm2->add_option("--X", f2.X, "progression height X (decimal)");
  thm2->add_option("--cap", f2.cap, "sample cap for the moduli");

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth scans");
  add_common_flags(oracle, fo);
  oracle->add_option("--S", fo.S, "comma-separated primes, e.g. 2,3,5");
  oracle->add_option("--H", fo.H, "height bound for a+b=c and a+1=c");
  oracle->add_option("--N", fo.N, "also scan d(d+1) | N for this N (decimal)");
  oracle->add_option("--bound", fo.bound, "d bound for the divisor scan");

  auto* params = app.add_subcommand("params", "exponent calculus as JSON");
  add_common_flags(params, fp);
  params->add_option("--C", fp.C, "zero-density constant C (default 12/5)");
  params->add_option("--beta", fp.beta, "beta to check / find witnesses for");
  params->add_option("--gamma", fp.gamma, "gamma for the thm1 check");
  params->add_option("--alpha", fp.alpha, "alpha for the thm2 check");

  auto* runcmd = app.add_subcommand("run", "dispatch on the config file's mode");
  add_common_flags(runcmd, fr);

  CLI11_PARSE(app, argc, argv);

  try {
    if (thm1->parsed()) return dispatch(build_config(f1, "thm1"));
    if (thm2->parsed()) return dispatch(build_config(f2, "thm2"));
    if (oracle->parsed()) return dispatch(build_config(fo, "oracle"));
    if (params->parsed()) return dispatch(build_config(fp, "params"));
    if (runcmd->parsed()) {
      if (fr.config_file.empty()) {
        throw std::invalid_argument("run: --config FILE is required");
      }
      ExperimentConfig cfg;
      cfg.merge_file(fr.config_file);
      if (!fr.json_override.empty()) cfg.merge_json(fr.json_override);
      if (fr.out) cfg.set("out", *fr.out);
      if (fr.cache) cfg.set("cache", *fr.cache);
      if (fr.seed) cfg.set("seed", std::to_string(*fr.seed));
      return dispatch(cfg);
    }
  } catch (const std::logic_error& e) {
    // invalid_argument and domain_error are config/parameter problems;
    // anything else under logic_error is a verification failure.
    if (dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::domain_error*>(&e)) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
