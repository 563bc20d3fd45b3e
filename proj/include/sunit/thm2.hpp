#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sunit/bigint.hpp"
#include "sunit/oracle.hpp"
#include "sunit/thm1.hpp"
#include "sunit/types.hpp"

namespace sunit {

// Squarefree moduli with exactly K prime factors, each prime taken from
// [y/2, y). Complete enumeration without a cap, seeded sample otherwise.
inline std::vector<SmoothSquarefree> build_moduli(
    std::uint64_t y, std::uint64_t K, std::optional<std::uint64_t> cap = {},
    std::uint64_t seed = kDefaultSeed) {
  if (K < 1) throw std::invalid_argument("build_moduli: K must be >= 1");
  if (y < 2) throw std::invalid_argument("build_moduli: y must be >= 2");
  LevelSetSpec spec{(y + 1) / 2, y - 1, K, cap, seed};
  return build_level_set(spec);
}

// One member of the arithmetic progression 1 (mod q): a squarefree y-smooth
// ell = q*m + 1.
struct ProgressionHit {
  Natural q;
  SmoothSquarefree ell;
  Natural m;

  ProgressionHit(Natural q_in, SmoothSquarefree ell_in)
      : q(std::move(q_in)), ell(std::move(ell_in)) {
    if (q < 2 || ell.value() <= 1) {
      throw std::invalid_argument("ProgressionHit: need q >= 2 and ell > 1");
    }
    const Natural diff = ell.value() - 1;
    if (diff % q != 0) {
      throw std::invalid_argument("ProgressionHit: ell is not 1 mod q");
    }
    m = diff / q;
  }
};

// Visits every squarefree product of the given primes that stays <= bound,
// including the empty product 1. Depth-first with ascending primes, so the
// bound prunes whole subtrees.
inline void for_each_squarefree_smooth(
    std::span<const std::uint64_t> primes, const Natural& bound,
    const std::function<void(const Natural&, const std::vector<std::uint64_t>&)>& visit) {
  std::vector<std::uint64_t> factors;
  Natural value = 1;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    visit(value, factors);
    for (std::size_t i = from; i < primes.size(); ++i) {
      Natural child = value * primes[i];
      if (child > bound) break;
      factors.push_back(primes[i]);
      std::swap(value, child);
      dfs(i + 1);
      std::swap(value, child);
      factors.pop_back();
    }
  };
  if (bound >= 1) dfs(0);
}

// All ell in (1, X] with ell = 1 (mod q), squarefree and y-smooth,
// ascending, each paired with m = (ell-1)/q.
inline std::vector<ProgressionHit> sieve_progression(const Natural& q,
                                                     const Natural& X,
                                                     std::uint64_t y) {
  if (q < 2) throw std::invalid_argument("sieve_progression: q must be >= 2");
  const auto primes = sieve_primes(y);
  std::vector<ProgressionHit> hits;
  for_each_squarefree_smooth(
      primes, X, [&](const Natural& value, const std::vector<std::uint64_t>& factors) {
        if (value > 1 && value % q == 1) {
          hits.emplace_back(q, SmoothSquarefree(factors));
        }
      });
  std::sort(hits.begin(), hits.end(),
            [](const ProgressionHit& a, const ProgressionHit& b) {
              return a.ell.value() < b.ell.value();
            });
  return hits;
}

// Multiplicity of each ratio m; argmax ties go to the smaller m.
inline Census m_census(const std::vector<ProgressionHit>& hits) {
  return make_census(hits,
                     [](const ProgressionHit& h) -> const Natural& { return h.m; });
}

struct Thm2Inputs {
  std::uint64_t y = 0;
  std::uint64_t K = 0;
  Natural X;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = kDefaultSeed;
};

struct Thm2Report {
  RunStatus status = RunStatus::ok;
  std::string message;
  Thm2Inputs inputs;

  std::size_t moduli_count = 0;
  std::size_t hit_count = 0;
  Census ratios;

  Natural m_star;
  std::size_t m_star_count = 0;
  std::vector<ProgressionHit> hits_for_m;  // the m* group, ascending in q

  Natural N;  // m* times the primorial of y
  std::vector<Natural> d_list;
  std::optional<std::vector<Natural>> oracle_d;  // filled when N is small

  double log_n = 0.0;
  double implied_beta = 0.0;   // log K / log y
  double implied_gamma = 0.0;  // log X / log Z with Z = y^K

  double log_benchmark() const {  // log exp((log N)^(1/16))
    return std::pow(log_n, 1.0 / 16.0);
  }
};

// Oracle cross-checks stay affordable up to this N.
inline const Natural kOracleNLimit = Natural(1000000000);

// N = m * primorial(y) and the consecutive divisor pairs d = q*m witnessed
// by the hits. Divisibility is certain structurally (q and ell are coprime,
// squarefree and y-smooth, so q*ell divides the primorial); it is still
// re-checked by exact division, and any failure is a pipeline bug.
inline Thm2Report assemble_N(const Natural& m, std::uint64_t y,
                             const std::vector<ProgressionHit>& hits_for_m) {
  if (m < 1) throw std::invalid_argument("assemble_N: m must be >= 1");
  for (const auto& h : hits_for_m) {
    if (h.m != m) {
      throw std::invalid_argument("assemble_N: hit with ratio " + h.m.str() +
                                  " does not match m = " + m.str());
    }
  }
  Thm2Report report;
  report.inputs.y = y;
  report.m_star = m;
  report.m_star_count = hits_for_m.size();
  report.hits_for_m = hits_for_m;
  report.N = m * primorial(y);
  report.log_n = report.N >= 1 ? log_natural(report.N) : 0.0;

  for (const auto& h : hits_for_m) {
    report.d_list.push_back(h.q * m);
  }
  std::sort(report.d_list.begin(), report.d_list.end());
  report.d_list.erase(std::unique(report.d_list.begin(), report.d_list.end()),
                      report.d_list.end());

  for (const Natural& d : report.d_list) {
    if (report.N % (d * (d + 1)) != 0) {
      throw std::logic_error("assemble_N: d(d+1) does not divide N for d = " +
                             d.str());
    }
  }

  if (report.N >= 2 && report.N <= kOracleNLimit && !report.d_list.empty()) {
    report.oracle_d = consecutive_divisor_count(report.N, report.d_list.back());
    for (const Natural& d : report.d_list) {
      if (!std::binary_search(report.oracle_d->begin(), report.oracle_d->end(), d)) {
        throw std::logic_error("assemble_N: oracle scan is missing d = " + d.str());
      }
    }
  }
  return report;
}

// Full pipeline: moduli, per-modulus progression sieve, ratio census,
// popular m, assembly and verification of N.
inline Thm2Report run_thm2(const Thm2Inputs& in) {
  Thm2Report report;
  report.inputs = in;

  std::vector<SmoothSquarefree> moduli;
  try {
    moduli = build_moduli(in.y, in.K, in.cap, in.seed);
  } catch (const std::invalid_argument& e) {
    report.status = RunStatus::infeasible_params;
    report.message = e.what();
    return report;
  }
  report.moduli_count = moduli.size();
  if (!moduli.empty() && in.X < moduli.front().value()) {
    report.status = RunStatus::infeasible_params;
    report.message = "X below the smallest modulus leaves every progression empty";
    return report;
  }

  std::vector<ProgressionHit> hits;
  for (const auto& q : moduli) {
    auto part = sieve_progression(q.value(), in.X, in.y);
    hits.insert(hits.end(), part.begin(), part.end());
  }
  report.hit_count = hits.size();
  if (hits.empty()) {
    report.status = RunStatus::empty_census;
    report.message = "no squarefree smooth progression hits below X";
    return report;
  }

  report.ratios = m_census(hits);
  const Natural m_star = *report.ratios.popular;
  std::vector<ProgressionHit> group;
  for (const auto& h : hits) {
    if (h.m == m_star) group.push_back(h);
  }
  std::sort(group.begin(), group.end(),
            [](const ProgressionHit& a, const ProgressionHit& b) {
              return a.q < b.q;
            });

  Thm2Report core = assemble_N(m_star, in.y, group);
  report.m_star = core.m_star;
  report.m_star_count = core.m_star_count;
  report.hits_for_m = std::move(core.hits_for_m);
  report.N = std::move(core.N);
  report.d_list = std::move(core.d_list);
  report.oracle_d = std::move(core.oracle_d);
  report.log_n = core.log_n;

  report.implied_beta = std::log(static_cast<double>(in.K)) /
                        std::log(static_cast<double>(in.y));
  report.implied_gamma = log_natural(in.X) /
                         (static_cast<double>(in.K) * std::log(static_cast<double>(in.y)));
  return report;
}

}  // namespace sunit
