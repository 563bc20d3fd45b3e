#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunit/oracle.hpp"
#include "sunit/params.hpp"
#include "sunit/thm1.hpp"
#include "sunit/thm2.hpp"

namespace sunit {

using Json = nlohmann::ordered_json;

// Counting convention carried in every report so the comparison constants
// are unambiguous.
inline constexpr const char* kConvention = "unordered a<=b, gcd(a,b)=1";

namespace detail {

inline double exp_or_inf(double log_value) {
  return log_value > 700.0 ? std::numeric_limits<double>::infinity()
                           : std::exp(log_value);
}

inline Json natural_list(const std::vector<Natural>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

inline void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::trunc | std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + file.string());
  }
  out << text;
}

}  // namespace detail

// --- CSV -------------------------------------------------------------------

inline std::string thm1_solutions_csv(const Thm1Report& report) {
  std::ostringstream out;
  out << "a,b,c,v,m,ell1,ell2\n";
  for (const auto& r : report.solutions) {
    out << r.a.str() << ',' << r.b.str() << ',' << r.c.str() << ','
        << r.v.str() << ',' << r.m.str() << ',' << r.ell1.str() << ','
        << r.ell2.str() << '\n';
  }
  return out.str();
}

inline std::string thm2_pairs_csv(const Thm2Report& report) {
  std::ostringstream out;
  out << "q,ell,m,d\n";
  for (const auto& h : report.hits_for_m) {
    out << h.q.str() << ',' << h.ell.value().str() << ',' << h.m.str() << ','
        << Natural(h.q * h.m).str() << '\n';
  }
  return out.str();
}

inline std::string oracle_solutions_csv(const std::vector<SUnitSolution>& sols) {
  std::ostringstream out;
  out << "a,b,c\n";
  for (const auto& s : sols) {
    out << s.a.str() << ',' << s.b.str() << ',' << s.c.str() << '\n';
  }
  return out.str();
}

// Rows of a CSV file, header excluded.
inline std::vector<std::vector<std::string>> read_csv_rows(
    const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw std::runtime_error("cannot read " + file.string());
  }
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

// --- JSON ------------------------------------------------------------------

inline Json thm1_report_json(const Thm1Report& report) {
  Json j;
  j["mode"] = "thm1";
  j["status"] = to_string(report.status);
  if (!report.message.empty()) j["message"] = report.message;
  j["convention"] = kConvention;
  j["inputs"] = {
      {"y", report.inputs.y},
      {"beta", report.inputs.beta},
      {"gamma", report.inputs.gamma},
      {"cap_l", report.inputs.cap_l ? Json(*report.inputs.cap_l) : Json(nullptr)},
      {"cap_m", report.inputs.cap_m ? Json(*report.inputs.cap_m) : Json(nullptr)},
      {"seed", report.inputs.seed},
  };
  if (report.status != RunStatus::ok) return j;

  j["derived"] = {
      {"k_l", report.k_l},
      {"k_m", report.k_m},
      {"l_interval", {report.l_lo, report.l_hi}},
      {"m_interval", {report.m_lo, report.m_hi}},
      {"l_size", report.l_size},
      {"m_size", report.m_size},
  };
  j["census"] = {
      {"collisions", report.collision_count},
      {"distinct_ratios", report.ratios.counts.size()},
      {"u_star", report.u_star.str()},
      {"u_star_count", report.u_star_count},
      {"two_stage", {{"v", report.two_stage_v.str()},
                     {"count", report.two_stage_count}}},
  };
  j["selection"] = {
      {"v_star", report.v_star.str()},
      {"solution_count", report.solutions.size()},
  };
  Json s_primes = Json::array();
  for (std::uint64_t p : report.S.primes()) s_primes.push_back(p);
  j["s"] = {{"size", report.S.size()}, {"primes", s_primes}};
  j["benchmarks"] = {
      {"achieved", report.solutions.size()},
      {"log_target_exp_s_beta", report.log_target()},
      {"target_exp_s_beta", detail::exp_or_inf(report.log_target())},
      {"log_evertse_exp_4s_6", report.log_evertse()},
      {"evertse_exp_4s_6", detail::exp_or_inf(report.log_evertse())},
  };
  j["artifacts"] = {{"solutions_csv", "solutions.csv"}};
  return j;
}

inline Json thm2_report_json(const Thm2Report& report) {
  Json j;
  j["mode"] = "thm2";
  j["status"] = to_string(report.status);
  if (!report.message.empty()) j["message"] = report.message;
  j["inputs"] = {
      {"y", report.inputs.y},
      {"K", report.inputs.K},
      {"X", report.inputs.X.str()},
      {"cap", report.inputs.cap ? Json(*report.inputs.cap) : Json(nullptr)},
      {"seed", report.inputs.seed},
  };
  if (report.status != RunStatus::ok) return j;

  Json m_factors = Json::array();
  for (const Natural& p : factorize(report.m_star)) m_factors.push_back(p.str());
  Json prim_primes = Json::array();
  for (std::uint64_t p : sieve_primes(report.inputs.y)) prim_primes.push_back(p);

  j["moduli_count"] = report.moduli_count;
  j["hit_count"] = report.hit_count;
  j["census"] = {
      {"total", report.ratios.total},
      {"distinct_ratios", report.ratios.counts.size()},
  };
  j["m_star"] = report.m_star.str();
  j["m_star_count"] = report.m_star_count;
  j["N"] = report.N.str();
  j["N_factorization"] = {
      {"m_factors", m_factors},
      {"primorial_primes", prim_primes},
  };
  j["d_count"] = report.d_list.size();
  j["d_list"] = detail::natural_list(report.d_list);
  j["oracle_d"] =
      report.oracle_d ? detail::natural_list(*report.oracle_d) : Json(nullptr);
  j["benchmarks"] = {
      {"achieved", report.d_list.size()},
      {"log_n", report.log_n},
      {"log_target_exp_logn_beta", report.log_benchmark()},
      {"target_exp_logn_beta", detail::exp_or_inf(report.log_benchmark())},
  };
  j["implied"] = {
      {"beta", report.implied_beta},
      {"gamma", report.implied_gamma},
  };
  j["artifacts"] = {{"pairs_csv", "pairs.csv"}};
  return j;
}

struct OracleRun {
  PrimeSet S;
  Natural H;
  std::vector<SUnitSolution> abc;
  std::vector<std::pair<Natural, Natural>> a1c;
  std::optional<Natural> divisor_n;
  std::optional<Natural> divisor_bound;
  std::vector<Natural> divisors;
};

inline Json oracle_report_json(const OracleRun& run) {
  Json j;
  j["mode"] = "oracle";
  Json s_primes = Json::array();
  for (std::uint64_t p : run.S.primes()) s_primes.push_back(p);
  j["S"] = s_primes;
  j["H"] = run.H.str();
  j["convention"] = kConvention;
  Json abc_solutions = Json::array();
  for (const auto& s : run.abc) {
    abc_solutions.push_back({s.a.str(), s.b.str(), s.c.str()});
  }
  j["abc"] = {{"count", run.abc.size()}, {"solutions", abc_solutions}};
  Json a1c_pairs = Json::array();
  for (const auto& [a, c] : run.a1c) a1c_pairs.push_back({a.str(), c.str()});
  j["a1c"] = {{"count", run.a1c.size()}, {"pairs", a1c_pairs}};
  if (run.divisor_n) {
    j["consecutive_divisors"] = {
        {"N", run.divisor_n->str()},
        {"bound", run.divisor_bound->str()},
        {"count", run.divisors.size()},
        {"d", detail::natural_list(run.divisors)},
    };
  }
  j["artifacts"] = {{"solutions_csv", "solutions.csv"}};
  return j;
}

// --- artifact bundles --------------------------------------------------------

inline void write_thm1_artifacts(const Thm1Report& report,
                                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  detail::write_text(dir / "report.json", thm1_report_json(report).dump(2) + "\n");
  if (report.status == RunStatus::ok) {
    detail::write_text(dir / "solutions.csv", thm1_solutions_csv(report));
  }
}

inline void write_thm2_artifacts(const Thm2Report& report,
                                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  detail::write_text(dir / "report.json", thm2_report_json(report).dump(2) + "\n");
  if (report.status == RunStatus::ok) {
    detail::write_text(dir / "pairs.csv", thm2_pairs_csv(report));
  }
}

inline void write_oracle_artifacts(const OracleRun& run,
                                   const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  detail::write_text(dir / "report.json", oracle_report_json(run).dump(2) + "\n");
  detail::write_text(dir / "solutions.csv", oracle_solutions_csv(run.abc));
}

inline Json load_report(const std::filesystem::path& dir) {
  std::ifstream in(dir / "report.json");
  if (!in) {
    throw std::runtime_error("cannot read " + (dir / "report.json").string());
  }
  Json j;
  in >> j;
  return j;
}

// Re-reads a report bundle and re-derives its counts and benchmarks; any
// disagreement with the stored values throws.
inline Json recount_thm1_artifacts(const std::filesystem::path& dir) {
  Json j = load_report(dir);
  if (j.at("status") != "ok") return j;
  const auto rows = read_csv_rows(dir / j.at("artifacts").at("solutions_csv").get<std::string>());
  if (rows.size() != j.at("selection").at("solution_count").get<std::size_t>()) {
    throw std::runtime_error("thm1 recount: CSV row count disagrees with report");
  }
  for (const auto& row : rows) {
    if (parse_natural(row.at(0)) + parse_natural(row.at(1)) != parse_natural(row.at(2))) {
      throw std::runtime_error("thm1 recount: CSV row violates a+b=c");
    }
  }
  const auto s = j.at("s").at("size").get<double>();
  const auto beta = j.at("inputs").at("beta").get<double>();
  const double log_target = std::pow(s, beta);
  const double log_evertse = 4.0 * s + 6.0;
  if (std::abs(log_target - j.at("benchmarks").at("log_target_exp_s_beta").get<double>()) > 1e-9 ||
      std::abs(log_evertse - j.at("benchmarks").at("log_evertse_exp_4s_6").get<double>()) > 1e-9) {
    throw std::runtime_error("thm1 recount: benchmarks do not recompute");
  }
  return j;
}

inline Json recount_thm2_artifacts(const std::filesystem::path& dir) {
  Json j = load_report(dir);
  if (j.at("status") != "ok") return j;
  const auto rows = read_csv_rows(dir / j.at("artifacts").at("pairs_csv").get<std::string>());
  if (rows.size() != j.at("m_star_count").get<std::size_t>()) {
    throw std::runtime_error("thm2 recount: CSV row count disagrees with report");
  }
  const Natural m = parse_natural(j.at("m_star").get<std::string>());
  const Natural N = parse_natural(j.at("N").get<std::string>());
  for (const auto& row : rows) {
    const Natural q = parse_natural(row.at(0));
    const Natural ell = parse_natural(row.at(1));
    const Natural d = parse_natural(row.at(3));
    if (q * m + 1 != ell || d != q * m || N % (d * (d + 1)) != 0) {
      throw std::runtime_error("thm2 recount: CSV row violates the hit equations");
    }
  }
  if (rows.size() != j.at("d_count").get<std::size_t>()) {
    throw std::runtime_error("thm2 recount: d count disagrees with CSV");
  }
  const double log_n = log_natural(N);
  if (std::abs(log_n - j.at("benchmarks").at("log_n").get<double>()) > 1e-9) {
    throw std::runtime_error("thm2 recount: log N does not recompute");
  }
  return j;
}

// --- params ------------------------------------------------------------------

inline Json params_report_json(double C, std::optional<double> beta,
                               std::optional<double> gamma,
                               std::optional<double> alpha) {
  Json j;
  j["mode"] = "params";
  const double supremum = max_beta_thm1();
  j["thm1_supremum"] = {
      {"value", supremum},
      {"two_minus_sqrt2", 2.0 - std::sqrt(2.0)},
  };
  if (beta && gamma) {
    bool feasible = false;
    std::string note;
    try {
      feasible = check_thm1(*beta, *gamma);
    } catch (const std::domain_error& e) {
      note = e.what();
    }
    j["thm1_check"] = {{"beta", *beta}, {"gamma", *gamma}, {"feasible", feasible}};
    if (!note.empty()) j["thm1_check"]["note"] = note;
  }
  if (beta) {
    auto witness = thm1_feasible_gamma(*beta);
    j["thm1_witness_gamma"] =
        witness ? Json(*witness) : Json(nullptr);
  }
  const Thm2Optimum opt = optimal_thm2(C);
  j["thm2_optimum"] = {
      {"C", C},
      {"alpha", opt.alpha},
      {"beta", opt.beta},
      {"gamma", opt.gamma},
  };
  if (beta) {
    auto witness = thm2_witness(*beta, C);
    if (witness) {
      j["thm2_witness"] = {
          {"alpha", witness->alpha},
          {"beta", witness->beta},
          {"gamma", witness->gamma},
          {"C", witness->C},
          {"feasible", check_thm2(*witness)},
      };
    } else {
      j["thm2_witness"] = nullptr;
    }
  }
  if (alpha && beta && gamma) {
    bool feasible = false;
    std::string note;
    try {
      feasible = check_thm2(ParamPoint{*alpha, *beta, *gamma, C});
    } catch (const std::domain_error& e) {
      note = e.what();
    }
    j["thm2_check"] = {
        {"alpha", *alpha}, {"beta", *beta}, {"gamma", *gamma}, {"C", C},
        {"feasible", feasible}};
    if (!note.empty()) j["thm2_check"]["note"] = note;
  }
  return j;
}

}  // namespace sunit
