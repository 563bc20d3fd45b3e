// Walks the a+b=c construction on a tiny instance and prints each stage.

#include <iostream>

#include "sunit/sunit.hpp"

int main() {
  using namespace sunit;

  const auto L = build_level_set({16, 32, 2, {}, kDefaultSeed});
  const auto M = build_level_set({8, 15, 1, {}, kDefaultSeed});
  std::cout << "|L| = " << L.size() << ", |M| = " << M.size() << "\n";

  const auto census = collision_census(L, M);
  std::cout << census.triples.size() << " collisions\n";
  for (const auto& t : census.triples) {
    const auto r = reduce_collision(t);
    std::cout << "  " << t.ell1.value() << " = " << t.ell2.value() << " + "
              << t.u << " * " << t.m.value() << "   ->   " << r.c << " = "
              << r.a << " + " << r.b << "  (v = " << r.v << ")\n";
  }

  const auto ratios = ratio_census(census.triples);
  if (ratios.popular) {
    std::cout << "popular u = " << *ratios.popular << " (count "
              << ratios.popular_count << ")\n";
  }

  const auto report = run_thm1({32, 0.21, 0.6, {}, {}, kDefaultSeed});
  std::cout << "full run at y = 32: v* = " << report.v_star << ", "
            << report.solutions.size() << " solution(s), |S| = "
            << report.S.size() << "\n";
  return 0;
}
