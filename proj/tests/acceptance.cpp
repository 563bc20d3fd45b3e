// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion re-derives its expected values with independent brute
// force where the contract calls for it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sunit/sunit.hpp"
#include "test_support.hpp"

using namespace sunit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

#define REQUIRE_TRUE(cond, msg)                  \
  do {                                           \
    if (!(cond)) {                               \
      out.pass = false;                          \
      out.detail = (msg);                        \
      return out;                                \
    }                                            \
  } while (0)

// 1. Oracle correctness against an in-suite quadratic brute force.
Outcome criterion1() {
  Outcome out;
  const auto a1c = count_a1c(PrimeSet({2, 3}), 10);
  const auto brute_a1c = testo::brute_a1c({2, 3}, 10);
  REQUIRE_TRUE((brute_a1c == std::vector<std::uint64_t>{1, 2, 3, 8}),
               "brute force disagrees with the frozen a1c values");
  REQUIRE_TRUE(a1c.size() == 4, "a1c count != 4");
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE_TRUE(a1c[i].first == brute_a1c[i], "a1c member mismatch");
  }

  const auto abc = count_abc(PrimeSet({2}), 100);
  const auto brute = testo::brute_abc({2}, 100);
  REQUIRE_TRUE(brute.size() == 1 && brute[0] == std::make_tuple(1ull, 1ull, 2ull),
               "brute force disagrees with the frozen abc value");
  REQUIRE_TRUE(abc.size() == 1, "abc count != 1");
  REQUIRE_TRUE(abc[0].a == 1 && abc[0].b == 1 && abc[0].c == 2,
               "abc solution != (1,1,2)");
  return out;
}

// 2. Exact pigeonhole inequality and collision counting on random instances.
Outcome criterion2() {
  Outcome out;
  std::mt19937_64 rng(0x5eed0002);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t size = 1 + rng() % 500;
    std::set<std::uint64_t> values;
    while (values.size() < size) values.insert(1 + rng() % 1000000000ull);
    std::vector<Natural> L(values.begin(), values.end());
    const Natural m = 2 + rng() % 997;

    const auto hist = residue_histogram(L, m);
    Natural sum_sq = 0;
    std::size_t total = 0;
    for (const auto& [res, r] : hist) {
      sum_sq += Natural(r) * r;
      total += r;
    }
    REQUIRE_TRUE(total == L.size(), "histogram loses elements");
    REQUIRE_TRUE(sum_sq * m >= Natural(L.size()) * Natural(L.size()),
                 "Cauchy-Schwarz pigeonhole violated");

    std::size_t ordered = 0;
    for (std::size_t i = 0; i < L.size(); ++i) {
      for (std::size_t j = 0; j < L.size(); ++j) {
        if (i != j && (L[i] - L[j]) % m == 0) ++ordered;
      }
    }
    REQUIRE_TRUE(Natural(ordered) == sum_sq - Natural(L.size()),
                 "ordered collision count != sum r^2 - |L|");
  }
  return out;
}

// 3. Theorem 1 end to end at y = 64 with K = 2, K_m = 1, full enumeration.
Outcome criterion3(Thm1Report* saved) {
  Outcome out;
  const Thm1Inputs in{64, 0.17, 0.6, {}, {}, kDefaultSeed};
  const Thm1Report report = run_thm1(in);
  REQUIRE_TRUE(report.status == RunStatus::ok,
               std::string("run failed: ") + report.message);
  REQUIRE_TRUE(report.k_l == 2 && report.k_m == 1, "K or K_m off target");

  REQUIRE_TRUE(!report.solutions.empty(), "no solutions emitted");
  for (const auto& r : report.solutions) {
    const auto sol = verify_solution(r.a, r.b, r.c, report.S);
    REQUIRE_TRUE(sol.has_value(), "emitted solution failed verification");
  }

  Natural max_c = 2;
  for (const auto& r : report.solutions) max_c = std::max(max_c, r.c);
  const auto oracle = count_abc(report.S, max_c);
  for (const auto& r : report.solutions) {
    const bool found =
        std::any_of(oracle.begin(), oracle.end(), [&](const SUnitSolution& s) {
          return s.a == r.a && s.b == r.b && s.c == r.c;
        });
    REQUIRE_TRUE(found, "emitted solution missing from the oracle enumeration");
  }

  REQUIRE_TRUE(report.solutions.size() >= 2,
               "no v-group holds two distinct solutions");
  if (saved) *saved = report;
  return out;
}

// 4. Theorem 2 worked micro-instance.
Outcome criterion4() {
  Outcome out;
  const Thm2Report report = run_thm2({5, 1, Natural(20), {}, kDefaultSeed});
  REQUIRE_TRUE(report.status == RunStatus::ok,
               std::string("run failed: ") + report.message);
  REQUIRE_TRUE(report.hit_count == 1, "expected exactly one hit");
  REQUIRE_TRUE(report.hits_for_m.size() == 1 &&
                   report.hits_for_m[0].q == 3 &&
                   report.hits_for_m[0].ell.value() == 10,
               "hit != (q=3, ell=10)");
  REQUIRE_TRUE(report.m_star == 3, "m* != 3");
  REQUIRE_TRUE(report.N == 90, "N != 90");
  REQUIRE_TRUE((report.d_list == std::vector<Natural>{9}), "d_list != [9]");

  const auto oracle = consecutive_divisor_count(Natural(90), Natural(90));
  REQUIRE_TRUE((oracle == std::vector<Natural>{1, 2, 5, 9}),
               "oracle divisor scan of 90 is off");
  const auto brute = testo::brute_consecutive_divisors(Natural(90), 90);
  REQUIRE_TRUE((brute == std::vector<std::uint64_t>{1, 2, 5, 9}),
               "in-suite brute scan disagrees");
  return out;
}

// 5. Theorem 2 end to end at y = 30, K = 2, X = 10^7.
Outcome criterion5(Thm2Report* saved) {
  Outcome out;
  const Thm2Report report = run_thm2({30, 2, Natural(10000000), {}, kDefaultSeed});
  REQUIRE_TRUE(report.status == RunStatus::ok,
               std::string("run failed: ") + report.message);

  REQUIRE_TRUE(!report.d_list.empty(), "no consecutive divisors emitted");
  for (const Natural& d : report.d_list) {
    REQUIRE_TRUE(report.N % (d * (d + 1)) == 0, "d(d+1) does not divide N");
  }

  std::size_t census_total = 0;
  for (const auto& [m, count] : report.ratios.counts) census_total += count;
  REQUIRE_TRUE(census_total == report.hit_count,
               "histogram total != number of hits");

  if (report.N <= 1000000000) {
    const auto oracle = consecutive_divisor_count(report.N, report.d_list.back());
    for (const Natural& d : report.d_list) {
      REQUIRE_TRUE(std::binary_search(oracle.begin(), oracle.end(), d),
                   "d missing from the oracle scan");
    }
  }
  if (saved) *saved = report;
  return out;
}

// 6. Parameter calculus: the two headline exponents.
Outcome criterion6() {
  Outcome out;
  const double sup = max_beta_thm1();
  REQUIRE_TRUE(std::abs(sup - (2.0 - std::sqrt(2.0))) <= 1e-9,
               "thm1 feasibility supremum misses 2 - sqrt(2)");

  const auto opt = optimal_thm2(12.0 / 5.0);
  REQUIRE_TRUE(opt.beta > 1.0 / 16.0, "beta* not above 1/16");

  const auto witness = thm2_witness(1.0 / 16.0, 12.0 / 5.0);
  REQUIRE_TRUE(witness.has_value(), "no witness at beta = 1/16");
  REQUIRE_TRUE(check_thm2(*witness), "witness fails check_thm2");
  return out;
}

// 7. Byte-identical CSV artifacts for repeated seeded runs of 3 and 5.
Outcome criterion7(const Thm1Report& thm1_first, const Thm2Report& thm2_first) {
  Outcome out;
  const Thm1Report thm1_again = run_thm1(thm1_first.inputs);
  REQUIRE_TRUE(thm1_solutions_csv(thm1_first) == thm1_solutions_csv(thm1_again),
               "thm1 CSV bytes differ between runs");
  const Thm2Report thm2_again = run_thm2(thm2_first.inputs);
  REQUIRE_TRUE(thm2_pairs_csv(thm2_first) == thm2_pairs_csv(thm2_again),
               "thm2 CSV bytes differ between runs");
  REQUIRE_TRUE(thm1_report_json(thm1_first).dump() ==
                   thm1_report_json(thm1_again).dump(),
               "thm1 report bytes differ between runs");
  REQUIRE_TRUE(thm2_report_json(thm2_first).dump() ==
                   thm2_report_json(thm2_again).dump(),
               "thm2 report bytes differ between runs");
  return out;
}

}  // namespace

int main() {
  Thm1Report thm1_report;
  Thm2Report thm2_report;

  struct Entry {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> body;
  };
  const std::vector<Entry> entries = {
      {1, "oracle correctness on frozen small cases", 1.0, criterion1},
      {2, "exact pigeonhole on 100 random (L, m) instances", 10.0, criterion2},
      {3, "theorem-1 pipeline end to end at y = 64", 300.0,
       [&] { return criterion3(&thm1_report); }},
      {4, "theorem-2 worked micro-instance y = 5", 1.0, criterion4},
      {5, "theorem-2 pipeline end to end at y = 30, X = 10^7", 300.0,
       [&] { return criterion5(&thm2_report); }},
      {6, "parameter calculus: 2 - sqrt(2) and 1/16", 1.0, criterion6},
      {7, "seeded reruns give byte-identical artifacts", 300.0,
       [&] { return criterion7(thm1_report, thm2_report); }},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = entry.body();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.pass && secs > entry.limit_s) {
      out.pass = false;
      out.detail = "exceeded the runtime budget";
    }
    std::printf("[%s] criterion %d: %s (%.2f s%s)\n", out.pass ? "PASS" : "FAIL",
                entry.id, entry.name, secs,
                out.detail.empty() ? "" : (std::string("; ") + out.detail).c_str());
    if (!out.pass) ++failures;
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", entries.size());
  } else {
    std::printf("acceptance: %d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
