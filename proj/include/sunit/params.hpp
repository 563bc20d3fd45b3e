#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace sunit {

// Strict inequalities carry an explicit comparison tolerance; anything on
// the boundary is classified infeasible.
inline constexpr double kCmpEps = 1e-12;

inline bool strictly_less(double a, double b) { return a < b - kCmpEps; }
inline bool strictly_greater(double a, double b) { return a > b + kCmpEps; }

// Feasibility for the a+b=c construction: gamma < 1-beta and
// (2+gamma)(1-beta) > 1.
inline bool check_thm1(double beta, double gamma) {
  if (!(strictly_greater(beta, 0.0) && strictly_less(beta, 1.0)) ||
      !(strictly_greater(gamma, 0.0) && strictly_less(gamma, 1.0))) {
    throw std::domain_error("check_thm1: beta, gamma must lie in (0,1)");
  }
  return strictly_less(gamma, 1.0 - beta) &&
         strictly_greater((2.0 + gamma) * (1.0 - beta), 1.0);
}

// Witness gamma for a given beta, searched geometrically below the upper
// boundary gamma = 1-beta. Both inequalities improve as gamma approaches
// that boundary from below, so a shrinking offset finds a witness whenever
// one exists.
inline std::optional<double> thm1_feasible_gamma(double beta) {
  if (!(strictly_greater(beta, 0.0) && strictly_less(beta, 1.0))) {
    return std::nullopt;
  }
  for (int k = 1; k <= 40; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const double gamma = 1.0 - beta - eps;
    if (!(strictly_greater(gamma, 0.0) && strictly_less(gamma, 1.0))) continue;
    if (check_thm1(beta, gamma)) return gamma;
  }
  return std::nullopt;
}

// Supremum of feasible beta, located by bisection over the witness search.
// Lands on 2 - sqrt(2) well within 1e-9.
inline double max_beta_thm1() {
  double lo = 0.5;   // feasible: gamma = 0.4 works
  double hi = 0.75;  // infeasible
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (thm1_feasible_gamma(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Exponent tuple for the consecutive-divisor construction.
struct ParamPoint {
  double alpha;
  double beta;
  double gamma;
  double C;
};

inline void validate_param_point(const ParamPoint& p) {
  if (!(p.alpha >= 0.5 && strictly_less(p.alpha, 1.0))) {
    throw std::domain_error("ParamPoint: alpha must lie in [1/2, 1)");
  }
  if (!(strictly_greater(p.beta, 0.0) && strictly_less(p.beta, 1.0))) {
    throw std::domain_error("ParamPoint: beta must lie in (0, 1)");
  }
  if (!strictly_greater(p.gamma, 0.0)) {
    throw std::domain_error("ParamPoint: gamma must be > 0");
  }
  if (!strictly_greater(p.C, 0.0)) {
    throw std::domain_error("ParamPoint: C must be > 0");
  }
}

// Conditions for the consecutive-divisor construction:
//   0 < beta < 1 - 3C(1-alpha)
//   gamma (1 - alpha - beta) > 1
//   (1-beta)(1+gamma) - 1 > gamma - 1   (same as beta(1+gamma) < 1)
inline bool check_thm2(const ParamPoint& p) {
  validate_param_point(p);
  if (!strictly_less(p.beta, 1.0 - 3.0 * p.C * (1.0 - p.alpha))) return false;
  if (!strictly_greater(p.gamma * (1.0 - p.alpha - p.beta), 1.0)) return false;
  if (!strictly_greater((1.0 - p.beta) * (1.0 + p.gamma) - 1.0, p.gamma - 1.0)) {
    return false;
  }
  return true;
}

struct Thm2Optimum {
  double alpha;
  double beta;
  double gamma;
};

// Closed-form optimum: gamma* = 3C + sqrt(9C^2 + 3C),
// alpha* = 1 - (1 + 1/gamma*)/(3C + 1), beta* = 1/(1 + gamma*).
inline Thm2Optimum optimal_thm2(double C) {
  if (!strictly_greater(C, 0.0)) {
    throw std::domain_error("optimal_thm2: C must be > 0");
  }
  const double gamma = 3.0 * C + std::sqrt(9.0 * C * C + 3.0 * C);
  const double alpha = 1.0 - (1.0 + 1.0 / gamma) / (3.0 * C + 1.0);
  const double beta = 1.0 / (1.0 + gamma);
  return {alpha, beta, gamma};
}

// Strict witness point for a given beta below beta*: nudge gamma above the
// optimum and re-derive alpha from it. The first perturbation that clears
// every strict inequality is returned.
inline std::optional<ParamPoint> thm2_witness(double beta, double C) {
  if (!strictly_greater(C, 0.0)) return std::nullopt;
  if (!(strictly_greater(beta, 0.0) && strictly_less(beta, 1.0))) {
    return std::nullopt;
  }
  const Thm2Optimum opt = optimal_thm2(C);
  for (int k = 1; k <= 40; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const double gamma = opt.gamma + eps;
    const double alpha = 1.0 - (1.0 + 1.0 / gamma) / (3.0 * C + 1.0);
    if (!(alpha >= 0.5 && strictly_less(alpha, 1.0))) continue;
    const ParamPoint candidate{alpha, beta, gamma, C};
    if (check_thm2(candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace sunit
