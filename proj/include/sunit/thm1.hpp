#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sunit/bigint.hpp"
#include "sunit/combinatorics.hpp"
#include "sunit/oracle.hpp"
#include "sunit/params.hpp"
#include "sunit/rng.hpp"
#include "sunit/types.hpp"

namespace sunit {

// Guard against accidental combinatorial blowups when no cap is given.
inline constexpr std::uint64_t kLevelSetLimit = 10'000'000;

// Products of exactly k distinct primes from the closed interval [lo, hi].
struct LevelSetSpec {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::size_t k = 0;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = kDefaultSeed;
};

// Complete enumeration when cap is absent or covers everything; otherwise a
// seeded uniform sample of combination ranks without replacement. Output is
// ascending by value either way.
inline std::vector<SmoothSquarefree> build_level_set(const LevelSetSpec& spec) {
  const auto primes = primes_in_range(spec.lo, spec.hi);
  if (spec.k > primes.size()) {
    throw std::invalid_argument(
        "build_level_set: k = " + std::to_string(spec.k) + " exceeds the " +
        std::to_string(primes.size()) + " primes in [" +
        std::to_string(spec.lo) + ", " + std::to_string(spec.hi) + "]");
  }
  const Natural total = binomial(primes.size(), spec.k);
  const bool complete = !spec.cap || Natural(*spec.cap) >= total;

  std::vector<SmoothSquarefree> out;
  auto emit = [&](const std::vector<std::size_t>& combo) {
    std::vector<std::uint64_t> factors;
    factors.reserve(combo.size());
    for (std::size_t idx : combo) factors.push_back(primes[idx]);
    out.emplace_back(std::move(factors));
  };

  if (complete) {
    if (total > kLevelSetLimit) {
      throw std::length_error(
          "build_level_set: complete enumeration of " + total.str() +
          " elements is above the safety limit; pass a cap");
    }
    // Standard ascending-index combination walk.
    std::vector<std::size_t> combo(spec.k);
    for (std::size_t i = 0; i < spec.k; ++i) combo[i] = i;
    while (true) {
      emit(combo);
      std::size_t i = spec.k;
      while (i > 0 && combo[i - 1] == primes.size() - spec.k + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < spec.k; ++j) combo[j] = combo[j - 1] + 1;
    }
  } else {
    SeededRng rng(spec.seed);
    for (const Natural& rank :
         sample_distinct_below(rng, total, static_cast<std::size_t>(*spec.cap))) {
      emit(unrank_combination(rank, primes.size(), spec.k));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A witness of ell1 = ell2 (mod m) with the derived ratio u = (ell1-ell2)/m.
struct CollisionTriple {
  SmoothSquarefree m;
  SmoothSquarefree ell1;
  SmoothSquarefree ell2;
  Natural u;

  CollisionTriple(SmoothSquarefree m_in, SmoothSquarefree ell1_in,
                  SmoothSquarefree ell2_in)
      : m(std::move(m_in)), ell1(std::move(ell1_in)), ell2(std::move(ell2_in)) {
    if (ell1.value() <= ell2.value()) {
      throw std::invalid_argument("CollisionTriple: ell1 must exceed ell2");
    }
    if (!ell1.coprime_with(m) || !ell2.coprime_with(m)) {
      throw std::invalid_argument("CollisionTriple: ell not coprime to m");
    }
    const Natural diff = ell1.value() - ell2.value();
    if (diff % m.value() != 0) {
      throw std::invalid_argument("CollisionTriple: m does not divide ell1-ell2");
    }
    u = diff / m.value();
  }
};

// r(L; a, m): residue class -> number of elements of L in it. Only nonempty
// classes appear.
inline std::map<Natural, std::size_t> residue_histogram(
    const std::vector<Natural>& values, const Natural& m) {
  if (m < 1) throw std::invalid_argument("residue_histogram: m must be >= 1");
  std::map<Natural, std::size_t> hist;
  for (const Natural& v : values) ++hist[v % m];
  return hist;
}

struct ModulusCensus {
  SmoothSquarefree m;
  std::map<Natural, std::size_t> histogram;
  std::size_t ordered_pairs = 0;  // sum over classes of r(r-1)
};

struct CollisionCensus {
  std::vector<CollisionTriple> triples;
  std::vector<ModulusCensus> per_modulus;
};

// For each m in M, every unordered pair ell1 > ell2 of L in a common residue
// class mod m. Inputs must be cross-coprime, which holds when the two level
// sets draw primes from disjoint intervals.
inline CollisionCensus collision_census(const std::vector<SmoothSquarefree>& L,
                                        const std::vector<SmoothSquarefree>& M) {
  std::set<std::uint64_t> l_primes;
  for (const auto& ell : L) l_primes.insert(ell.factors().begin(), ell.factors().end());
  for (const auto& m : M) {
    for (std::uint64_t p : m.factors()) {
      if (l_primes.count(p)) {
        throw std::invalid_argument(
            "collision_census: L and M share the prime " + std::to_string(p));
      }
    }
  }

  CollisionCensus census;
  for (const auto& m : M) {
    ModulusCensus mc{m, {}, 0};
    std::map<Natural, std::vector<const SmoothSquarefree*>> classes;
    for (const auto& ell : L) {
      classes[ell.value() % m.value()].push_back(&ell);
    }
    for (auto& [residue, members] : classes) {
      mc.histogram[residue] = members.size();
      mc.ordered_pairs += members.size() * (members.size() - 1);
      std::sort(members.begin(), members.end(),
                [](const SmoothSquarefree* x, const SmoothSquarefree* y) {
                  return x->value() < y->value();
                });
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (members[i]->value() == members[j]->value()) continue;
          census.triples.emplace_back(m, *members[j], *members[i]);
        }
      }
    }
    census.per_modulus.push_back(std::move(mc));
  }
  return census;
}

// Multiplicity of each ratio u; ties in the argmax go to the smaller u.
inline Census ratio_census(const std::vector<CollisionTriple>& collisions) {
  return make_census(collisions,
                     [](const CollisionTriple& t) -> const Natural& { return t.u; });
}

// The coprime triple left after dividing out g = gcd(ell1, ell2). g divides
// u because g is coprime to m and divides ell1 - ell2 = u*m.
struct ReducedSolution {
  Natural v;            // u / g
  Natural g;            // gcd(ell1, ell2)
  Natural a, b, c;      // a + b = c, gcd(a,b) = 1, normalized a <= b
  Natural m, ell1, ell2;  // originating collision
};

inline ReducedSolution reduce_collision(const Natural& m, const Natural& ell1,
                                        const Natural& ell2) {
  if (m < 1 || ell2 < 1 || ell1 <= ell2) {
    throw std::invalid_argument("reduce_collision: need ell1 > ell2 >= 1, m >= 1");
  }
  if (gcd_nat(ell1, m) != 1 || gcd_nat(ell2, m) != 1) {
    throw std::invalid_argument("reduce_collision: ell not coprime to m");
  }
  const Natural diff = ell1 - ell2;
  if (diff % m != 0) {
    throw std::invalid_argument("reduce_collision: m does not divide ell1-ell2");
  }
  const Natural u = diff / m;
  const Natural g = gcd_nat(ell1, ell2);
  if (u % g != 0) {
    throw std::logic_error("reduce_collision: gcd does not divide the ratio");
  }
  ReducedSolution r;
  r.v = u / g;
  r.g = g;
  r.m = m;
  r.ell1 = ell1;
  r.ell2 = ell2;
  Natural a = m * r.v;
  Natural b = ell2 / g;
  r.c = ell1 / g;
  if (a > b) std::swap(a, b);
  r.a = std::move(a);
  r.b = std::move(b);
  if (r.a + r.b != r.c || gcd_nat(r.a, r.b) != 1) {
    throw std::logic_error("reduce_collision: reduction left a non-coprime triple");
  }
  return r;
}

inline ReducedSolution reduce_collision(const CollisionTriple& t) {
  return reduce_collision(t.m.value(), t.ell1.value(), t.ell2.value());
}

// All primes in [y/4, y] together with the prime factors of v.
inline PrimeSet assemble_S(std::uint64_t y, const Natural& v) {
  if (v < 1) throw std::invalid_argument("assemble_S: v must be >= 1");
  std::vector<std::uint64_t> primes = primes_in_range((y + 3) / 4, y);
  for (const Natural& p : distinct_prime_factors(v)) {
    primes.push_back(to_u64(p));
  }
  return PrimeSet(std::move(primes));
}

enum class RunStatus { ok, infeasible_params, empty_census };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::ok: return "ok";
    case RunStatus::infeasible_params: return "infeasible_params";
    case RunStatus::empty_census: return "empty_census";
  }
  return "unknown";
}

struct Thm1Inputs {
  std::uint64_t y = 0;
  double beta = 0.0;
  double gamma = 0.0;
  std::optional<std::uint64_t> cap_l;
  std::optional<std::uint64_t> cap_m;
  std::uint64_t seed = kDefaultSeed;
};

struct Thm1Report {
  RunStatus status = RunStatus::ok;
  std::string message;
  Thm1Inputs inputs;

  std::uint64_t k_l = 0;  // prime factors per element of L
  std::uint64_t k_m = 0;  // prime factors per element of M
  std::uint64_t l_lo = 0, l_hi = 0, m_lo = 0, m_hi = 0;
  std::size_t l_size = 0, m_size = 0;

  std::size_t collision_count = 0;
  Census ratios;

  // Two-stage route: most popular u first, then the best divisor v of it.
  Natural u_star;
  std::size_t u_star_count = 0;
  Natural two_stage_v;
  std::size_t two_stage_count = 0;

  // Direct route: group every reduction by its final v.
  Natural v_star;
  std::vector<ReducedSolution> solutions;  // distinct triples of the v* group
  std::vector<SUnitSolution> verified;     // same triples with factorizations

  PrimeSet S;

  double log_target() const {  // log exp(s^beta)
    return std::pow(static_cast<double>(S.size()), inputs.beta);
  }
  double log_evertse() const {  // log exp(4s+6)
    return 4.0 * static_cast<double>(S.size()) + 6.0;
  }
};

namespace detail {

// Distinct (a,b,c) per v, keeping the first witness in census order.
inline std::map<Natural, std::vector<ReducedSolution>> group_by_v(
    const std::vector<CollisionTriple>& triples) {
  std::map<Natural, std::vector<ReducedSolution>> groups;
  std::map<Natural, std::set<std::pair<Natural, Natural>>> seen;
  for (const auto& t : triples) {
    ReducedSolution r = reduce_collision(t);
    if (seen[r.v].emplace(r.a, r.b).second) {
      groups[r.v].push_back(std::move(r));
    }
  }
  return groups;
}

}  // namespace detail

// Full pipeline: level sets, collision census, ratio census, gcd reduction,
// v selection, S assembly, and oracle verification of every emitted triple.
inline Thm1Report run_thm1(const Thm1Inputs& in) {
  Thm1Report report;
  report.inputs = in;

  if (in.y < 4) {
    report.status = RunStatus::infeasible_params;
    report.message = "y too small to form the prime intervals";
    return report;
  }
  try {
    if (!check_thm1(in.beta, in.gamma)) {
      report.status = RunStatus::infeasible_params;
      report.message = "(beta, gamma) violates gamma < 1-beta or (2+gamma)(1-beta) > 1";
      return report;
    }
  } catch (const std::domain_error& e) {
    report.status = RunStatus::infeasible_params;
    report.message = e.what();
    return report;
  }

  const double y_beta = std::pow(static_cast<double>(in.y), in.beta);
  report.k_l = static_cast<std::uint64_t>(std::floor(y_beta));
  report.k_m = static_cast<std::uint64_t>(std::floor(in.gamma * y_beta));
  if (report.k_m < 1) {
    report.status = RunStatus::infeasible_params;
    report.message = "gamma * y^beta < 1 leaves M empty";
    return report;
  }

  report.l_lo = (in.y + 1) / 2;      // ceil(y/2), interval [y/2, y]
  report.l_hi = in.y;
  report.m_lo = (in.y + 3) / 4;      // ceil(y/4), interval [y/4, y/2)
  report.m_hi = (in.y + 1) / 2 - 1;  // largest integer below y/2

  LevelSetSpec l_spec{report.l_lo, report.l_hi, report.k_l, in.cap_l, in.seed};
  LevelSetSpec m_spec{report.m_lo, report.m_hi, report.k_m, in.cap_m, in.seed + 1};
  std::vector<SmoothSquarefree> L, M;
  try {
    L = build_level_set(l_spec);
    M = build_level_set(m_spec);
  } catch (const std::invalid_argument& e) {
    report.status = RunStatus::infeasible_params;
    report.message = e.what();
    return report;
  }
  report.l_size = L.size();
  report.m_size = M.size();

  CollisionCensus census = collision_census(L, M);
  report.collision_count = census.triples.size();
  if (census.triples.empty()) {
    report.status = RunStatus::empty_census;
    report.message = "no residue collisions between L and M";
    return report;
  }

  report.ratios = ratio_census(census.triples);
  report.u_star = *report.ratios.popular;
  report.u_star_count = report.ratios.popular_count;

  auto groups = detail::group_by_v(census.triples);

  // Two-stage route: restrict to u = u*, then take the best v dividing u*.
  {
    std::vector<CollisionTriple> popular;
    for (const auto& t : census.triples) {
      if (t.u == report.u_star) popular.push_back(t);
    }
    auto sub = detail::group_by_v(popular);
    std::size_t best = 0;
    for (const auto& [v, sols] : sub) {
      if (sols.size() > best) {
        best = sols.size();
        report.two_stage_v = v;
      }
    }
    report.two_stage_count = best;
  }

  // Direct route: best v over all reductions.
  std::size_t best = 0;
  for (const auto& [v, sols] : groups) {
    if (sols.size() > best) {
      best = sols.size();
      report.v_star = v;
    }
  }
  report.solutions = groups[report.v_star];
  std::sort(report.solutions.begin(), report.solutions.end(),
            [](const ReducedSolution& x, const ReducedSolution& y) {
              return std::tie(x.c, x.a) < std::tie(y.c, y.a);
            });

  report.S = assemble_S(in.y, report.v_star);
  for (const auto& r : report.solutions) {
    auto sol = verify_solution(r.a, r.b, r.c, report.S);
    if (!sol) {
      throw std::logic_error("run_thm1: emitted solution failed verification");
    }
    report.verified.push_back(std::move(*sol));
  }
  return report;
}

}  // namespace sunit
