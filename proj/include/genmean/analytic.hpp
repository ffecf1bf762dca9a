#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genmean/kernels.hpp"
#include "genmean/multiplicative.hpp"

namespace genmean {

/// Riemann zeta for real s != 1. Euler-Maclaurin for s >= 0, the functional
/// equation for s < 0, and exactly -1/2 at s = 0.
double zeta_real(double s);

/// Euler-Maclaurin summation alone; valid for every real s != 1 (it is the
/// analytic continuation), accurate while |s| stays moderate.
double zeta_euler_maclaurin(double s);

/// zeta'(s) for s > 1.5, by differentiating the Euler-Maclaurin formula.
double zeta_deriv_real(double s);

/// Gamma(x) for x > 0.
double gamma_real(double x);

struct EulerProductConstant {
  std::string name;
  unsigned b = 0;
  std::optional<unsigned> k;
  std::optional<double> r;
  double value = 0.0;
  double tail_bound = 0.0;  // |true value - value| <= tail_bound
  u64 prime_limit = 0;      // primes p <= prime_limit are multiplied out
  u64 term_limit = 0;       // terms kept in each local series
};

/// Local factor 1 + K_b(0) of the harmonic-mean constant at prime p, with
/// `terms` terms of the inner series.
double harmonic_local_factor(u64 p, unsigned b, unsigned terms);

/// First term of K_b(0) at p as an exact fraction: p (p^{b+1}-1) / (p^{b+1}(p^{b+1}-p) + p - 1).
Rational harmonic_first_term(u64 p, unsigned b);

/// C_b = prod_p (1 + K_b(0)) (1 - p^{-b}), i.e. A_b(0) / zeta(b).
EulerProductConstant constant_Cb(unsigned b, double tol = 1e-8);

/// Same with caller-fixed limits, tail bound reported but not enforced.
EulerProductConstant constant_Cb_fixed(unsigned b, u64 prime_limit, unsigned term_limit);

/// (1 - 1/p)^k sum_m f(p^{ceil(m/b)}) (T_m^k - T_{m-1}^k) with
/// T_m = sum_{v <= m} p^{-(r+1)v}, truncated after m = max_m.
double lcm_local_factor(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b, u64 p, unsigned max_m);

/// The lcm mean-value constant for f in A_r, k >= 2, b >= 2.
EulerProductConstant constant_lcm_general(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b,
                                          double tol = 1e-8);
EulerProductConstant constant_lcm_general_fixed(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b,
                                                u64 prime_limit);

/// The k = 2, f = id^r closed form with zeta prefactors.
EulerProductConstant constant_lcm_closed_k2(unsigned b, double r, double tol = 1e-8);
EulerProductConstant constant_lcm_closed_k2_fixed(unsigned b, double r, u64 prime_limit);

struct LcmRouteComparison {
  EulerProductConstant general;
  EulerProductConstant closed;
  double difference = 0.0;
  double allowed = 0.0;
  bool agree = false;
  std::string report;  // human-readable; explains any discrepancy
};

LcmRouteComparison compare_lcm_routes(unsigned b, double r, double tol = 1e-9);

/// sum_{n <= N} a(n) / n^s for the tabulated function a.
double dirichlet_partial(FnId fn, unsigned b, double s, u64 N, const SieveTable* table = nullptr);

/// Closed form of the full series when one is known.
std::optional<double> dirichlet_closed_form(FnId fn, unsigned b, double s);

/// Half-plane of absolute convergence: the series converges for s > value.
double dirichlet_abscissa(FnId fn, unsigned b);

}  // namespace genmean
