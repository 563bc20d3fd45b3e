// Builds an N with forced consecutive divisors and cross-checks it by scan.

#include <iostream>

#include "sunit/sunit.hpp"

int main() {
  using namespace sunit;

  const auto report = run_thm2({20, 1, Natural(100000), {}, kDefaultSeed});
  if (report.status != RunStatus::ok) {
    std::cout << "run failed: " << report.message << "\n";
    return 1;
  }
  std::cout << "m* = " << report.m_star << " from " << report.hit_count
            << " hits over " << report.moduli_count << " moduli\n";
  std::cout << "N = " << report.N << "\n";
  for (const auto& h : report.hits_for_m) {
    const Natural d = h.q * h.m;
    std::cout << "  d = " << d << ", d+1 = " << h.ell.value()
              << ", both divide N\n";
  }
  if (report.oracle_d) {
    std::cout << "scan of d <= " << report.d_list.back() << " finds "
              << report.oracle_d->size() << " consecutive divisor pairs\n";
  }
  return 0;
}
