#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "genmean/analytic.hpp"
#include "genmean/compensated.hpp"
#include "genmean/sieve.hpp"

namespace genmean {

namespace {

constexpr u64 kMaxPrimeLimit = 100'000'000;

// Sum over p > P of a p^{-e}, bounded by the integral a P^{1-e} / (e - 1).
double power_tail(double a, double e, double P) {
  if (!(e > 1.0)) throw DomainError("Euler product majorant has exponent <= 1; product not provably convergent");
  return a * std::pow(P, 1.0 - e) / (e - 1.0);
}

struct Majorant {
  struct Term {
    double coef;
    double exponent;
  };
  std::vector<Term> terms;

  double at(double p) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.coef * std::pow(p, -t.exponent);
    return s;
  }
  // Bound on |sum_{p > P} log R_p| given |R_p - 1| <= at(p) <= 1/2 there.
  double log_tail(double P) const {
    if (at(P + 1.0) > 0.5) return std::numeric_limits<double>::infinity();
    double s = 0.0;
    for (const auto& t : terms) s += power_tail(t.coef, t.exponent, P);
    return 2.0 * s;
  }
};

double relative_bound(double value, double log_error) { return std::fabs(value) * std::expm1(log_error); }

// ---- harmonic-mean constant ------------------------------------------------

// K_b(0) - p^{-b}, in terms of u = 1/p:
//   t_k = (1 - u^{b+1}) u^{kb} / ((1 - u^b) + u^{k(b+1)+b} (1 - u)),
//   t_1 - u^b = u^{2b} (1 - u)(1 - u^{b+1}) / ((1 - u^b) + u^{2b+1}(1 - u)).
double harmonic_excess(u64 p, unsigned b, unsigned terms) {
  const double u = 1.0 / static_cast<double>(p);
  const double ub = std::pow(u, b);
  const double ub1 = ub * u;
  double excess = ub * ub * (1.0 - u) * (1.0 - ub1) / ((1.0 - ub) + ub * ub * u * (1.0 - u));
  for (unsigned k = 2; k <= terms; ++k) {
    const double ukb = std::pow(u, static_cast<double>(k) * b);
    excess += (1.0 - ub1) * ukb / ((1.0 - ub) + ukb * std::pow(u, k) * ub * (1.0 - u));
  }
  return excess;
}

// ---- small monomial algebra for the closed-form majorant --------------------

struct Mono {
  double coef;
  double exp;
};
using Poly = std::vector<Mono>;

Poly normalize(Poly p) {
  std::sort(p.begin(), p.end(), [](const Mono& a, const Mono& b) { return a.exp < b.exp; });
  Poly out;
  for (const auto& m : p) {
    if (!out.empty() && std::fabs(out.back().exp - m.exp) < 1e-9)
      out.back().coef += m.coef;
    else
      out.push_back(m);
  }
  std::erase_if(out, [](const Mono& m) { return std::fabs(m.coef) < 1e-12; });
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back({x.coef * y.coef, x.exp + y.exp});
  return normalize(out);
}

Poly operator+(Poly a, const Poly& b) {
  a.insert(a.end(), b.begin(), b.end());
  return normalize(a);
}

Poly operator-(Poly a, Poly b) {
  for (auto& m : b) m.coef = -m.coef;
  return a + b;
}

Poly mono(double c, double e) { return {{c, e}}; }

Poly pow_poly(const Poly& a, unsigned n) {
  Poly out = mono(1, 0);
  for (unsigned i = 0; i < n; ++i) out = out * a;
  return out;
}

double eval_poly(const Poly& p, double u) {
  CompensatedSum s;
  for (const auto& m : p) s += m.coef * std::pow(u, m.exp);
  return s.value();
}

}  // namespace

// ---- C_b ---------------------------------------------------------------------

double harmonic_local_factor(u64 p, unsigned b, unsigned terms) {
  return 1.0 + std::pow(static_cast<double>(p), -static_cast<double>(b)) + harmonic_excess(p, b, terms);
}

Rational harmonic_first_term(u64 p, unsigned b) {
  const u128 pb1 = checked_pow(p, b + 1);
  const u128 num = checked_mul(p, pb1 - 1);
  const u128 den = checked_add(checked_mul(pb1, pb1 - p), p - 1);
  return Rational(static_cast<i128>(num), static_cast<i128>(den));
}

EulerProductConstant constant_Cb_fixed(unsigned b, u64 prime_limit, unsigned term_limit) {
  if (b < 2) throw DomainError("constant_Cb: requires b >= 2");
  if (term_limit < 1) throw DomainError("constant_Cb: term_limit must be >= 1");
  // F_p = (1 + K)(1 - q), q = p^{-b}; F_p - 1 = (K - q)(1 - q) - q^2.
  // With t_k <= (4/3) p^{-kb}: 0 <= K - q <= 6 p^{-2b}, so |F_p - 1| <= 6 p^{-2b}.
  CompensatedSum log_sum;
  double truncation = 0.0;
  for (u64 p : primes_up_to(prime_limit)) {
    const double q = std::pow(static_cast<double>(p), -static_cast<double>(b));
    const double excess = harmonic_excess(p, b, term_limit);
    log_sum += std::log1p(excess * (1.0 - q) - q * q);
    // Dropped terms k > term_limit sum to at most 2 p^{-(K+1)b}; F_p >= 3/4.
    const double dropped = 2.0 * std::pow(static_cast<double>(p), -static_cast<double>(term_limit + 1) * b);
    truncation += 2.0 * dropped / 0.75;
  }
  EulerProductConstant c;
  c.name = "Cb";
  c.b = b;
  c.value = std::exp(log_sum.value());
  const Majorant maj{{{6.0, 2.0 * b}}};
  c.tail_bound = relative_bound(c.value, maj.log_tail(static_cast<double>(prime_limit)) + truncation);
  c.prime_limit = prime_limit;
  c.term_limit = term_limit;
  return c;
}

EulerProductConstant constant_Cb(unsigned b, double tol) {
  if (b < 2) throw DomainError("constant_Cb: requires b >= 2");
  if (!(tol >= 1e-12)) throw DomainError("constant_Cb: tol must be >= 1e-12");
  const unsigned terms = 60 / b + 2;
  for (u64 P = 64; P <= kMaxPrimeLimit; P *= 2) {
    // the product itself is close to 1, so check the tail before multiplying
    const Majorant maj{{{6.0, 2.0 * b}}};
    if (maj.log_tail(static_cast<double>(P)) * 1.1 > tol && P * 2 <= kMaxPrimeLimit) continue;
    auto c = constant_Cb_fixed(b, P, terms);
    if (c.tail_bound <= tol) return c;
  }
  throw BudgetError("constant_Cb: tol unachievable under prime limit " + std::to_string(kMaxPrimeLimit));
}

// ---- lcm constant, general route -------------------------------------------

double lcm_local_factor(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b, u64 p, unsigned max_m) {
  const double pd = static_cast<double>(p);
  const double x = std::pow(pd, -(f.r + 1.0));
  CompensatedSum sum;
  double T_prev = 0.0;
  double T = 1.0;
  double xm = 1.0;  // x^m
  for (unsigned m = 0; m <= max_m; ++m) {
    if (m > 0) {
      xm *= x;
      T_prev = T;
      T += xm;
    }
    // T_m^k - T_{m-1}^k = x^m sum_{i<k} T_m^i T_{m-1}^{k-1-i}
    double g = 0.0;
    for (unsigned i = 0; i < k; ++i) g += std::pow(T, i) * (k - 1 - i == 0 ? 1.0 : std::pow(T_prev, k - 1 - i));
    const unsigned v = (m + b - 1) / b;
    const double fv = v == 0 ? 1.0 : f.prime_power_eval(p, v);
    sum += fv * xm * g;
  }
  return std::pow(1.0 - 1.0 / pd, k) * sum.value();
}

namespace {

struct LcmSetup {
  double r, C1, C2p;
  unsigned k, b, c;
  bool extract;
  double Tinf;
  double alpha_inner;
  Majorant maj;
};

LcmSetup lcm_setup(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b) {
  if (k < 2) throw DomainError("constant_lcm_general: requires k >= 2");
  if (b < 2) throw DomainError("constant_lcm_general: requires b >= 2");
  if (!(f.r > -1.0)) throw DomainError("constant_lcm_general: requires r > -1");
  LcmSetup s;
  s.r = f.r;
  s.C1 = f.C1;
  s.C2p = std::max(f.C2, 1.0 + f.C1);
  s.k = k;
  s.b = b;
  s.c = k * (k + 1) / 2;
  s.extract = f.C1 == 0.0 && f.r > 0.0;
  s.Tinf = 1.0 / (1.0 - std::pow(2.0, -(f.r + 1.0)));
  s.alpha_inner = f.r + 1.0 - f.r / b;
  const double two_k = std::pow(2.0, k);
  auto& t = s.maj.terms;
  if (s.extract) {
    t.push_back({(k + 1) * two_k, 3.0});
    t.push_back({std::pow(2.0, s.c), 4.0});
  } else {
    t.push_back({static_cast<double>(s.c), 2.0});
    t.push_back({(k + 1) * two_k, 3.0});
  }
  if (f.C1 > 0.0) t.push_back({k * f.C1, 1.5});
  t.push_back({(1.0 + f.C1) * two_k, f.r + 2.0});
  if (f.r >= 0.0) {
    t.push_back({s.C2p * k * two_k, f.r + 2.0});
  } else {
    const double alpha = 1.0 + f.r - f.r / b;
    t.push_back({s.C2p * k * std::pow(s.Tinf, k - 1) / (1.0 - std::pow(2.0, -alpha)), 2.0 * alpha});
  }
  return s;
}

// Bound on the dropped m > M part of the local series at p.
double inner_tail(const LcmSetup& s, double p, unsigned M) {
  const double a = s.alpha_inner;
  return s.C2p * s.k * std::pow(s.Tinf, s.k - 1) * std::pow(p, std::max(s.r, 0.0)) * std::pow(p, -(M + 1.0) * a) /
         (1.0 - std::pow(p, -a));
}

}  // namespace

EulerProductConstant constant_lcm_general_fixed(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b,
                                                u64 prime_limit) {
  const LcmSetup s = lcm_setup(f, k, b);
  Majorant maj = s.maj;
  const double P = static_cast<double>(prime_limit);
  if (s.extract)
    for (auto& t : maj.terms) t.coef /= std::pow(1.0 - 1.0 / (P * P), s.c);

  CompensatedSum log_sum;
  double truncation = 0.0;
  unsigned max_terms = 0;
  for (u64 p : primes_up_to(prime_limit)) {
    const double pd = static_cast<double>(p);
    unsigned M = b;
    while (inner_tail(s, pd, M) > 1e-18 && M < 4000) ++M;
    max_terms = std::max(max_terms, M + 1);
    const double L = lcm_local_factor(f, k, b, p, M);
    const double dropped = inner_tail(s, pd, M);
    if (!(L > 2.0 * dropped)) throw DomainError("constant_lcm_general: local factor not bounded away from 0");
    truncation += 2.0 * dropped / (L - dropped);
    double R = L;
    if (s.extract) R /= std::pow(1.0 - 1.0 / (pd * pd), s.c);
    log_sum += std::log(R);
  }
  EulerProductConstant out;
  out.name = "Clcm";
  out.b = b;
  out.k = k;
  out.r = f.r;
  double value = std::exp(log_sum.value());
  double eval_allowance = 0.0;
  if (s.extract) {
    value *= std::pow(zeta_real(2.0), -static_cast<double>(s.c));
    eval_allowance = 1e-12 * s.c;  // zeta(2) to ~1e-15 relative, kept generous
  }
  out.value = value;
  out.tail_bound = relative_bound(value, maj.log_tail(P) + truncation + eval_allowance);
  out.prime_limit = prime_limit;
  out.term_limit = max_terms;
  return out;
}

EulerProductConstant constant_lcm_general(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b, double tol) {
  if (!(tol > 0.0)) throw DomainError("constant_lcm_general: tol must be positive");
  const LcmSetup s = lcm_setup(f, k, b);
  // Pick the first power-of-two limit whose tail could meet tol, then verify.
  for (u64 P = 1024; P <= kMaxPrimeLimit; P *= 2) {
    const double tail = s.maj.log_tail(static_cast<double>(P));
    if (tail * 1.05 > tol && P * 2 <= kMaxPrimeLimit) continue;
    auto c = constant_lcm_general_fixed(f, k, b, P);
    if (c.tail_bound <= tol) return c;
  }
  throw BudgetError("constant_lcm_general: tol unachievable under prime limit " + std::to_string(kMaxPrimeLimit));
}

// ---- lcm constant, closed k = 2 route ---------------------------------------

namespace {

struct ClosedForm {
  double A, B;
  Poly W;  // numerator minus denominator of R_p, so R_p = 1 + W / D
  Poly D;
};

ClosedForm closed_form(unsigned b, double r) {
  ClosedForm cf;
  cf.A = (r + 1.0) * b - r;
  cf.B = 2.0 * (r + 1.0) * b - r;
  const Poly one = mono(1, 0);
  // bracket = u(1 - u^r)(2 - 2u^B - u^{r+1} + u^{(r+1)b+1}) + (1 - u^B)(1 - u^A)
  const Poly inner = mono(2, 0) + mono(-2, cf.B) + mono(-1, r + 1) + mono(1, (r + 1) * b + 1);
  const Poly bracket = mono(1, 1) * (one - mono(1, r)) * inner + (one - mono(1, cf.B)) * (one - mono(1, cf.A));
  const Poly N = pow_poly(one - mono(1, 1), 2) * bracket;
  cf.D = pow_poly(one - mono(1, 2), 3) * pow_poly(one - mono(1, r + 1), 2);
  cf.W = N - cf.D;
  for (const auto& m : cf.W)
    if (m.exp <= 1.0)
      throw DomainError("closed form: local factor deviates from 1 at order p^-" + std::to_string(m.exp) +
                        "; the product does not converge as printed");
  return cf;
}

// |R_p - 1| <= sum |w_i| p^{-e_i} / D(u) and D(u) >= D(1/P) for p > P.
Majorant closed_majorant(const ClosedForm& cf, double r, double P) {
  Majorant maj;
  const double scale = std::pow(1.0 - std::pow(P, -(r + 1.0)), 2) * std::pow(1.0 - 1.0 / (P * P), 3);
  for (const auto& m : cf.W) maj.terms.push_back({std::fabs(m.coef) / scale, m.exp});
  return maj;
}

}  // namespace

EulerProductConstant constant_lcm_closed_k2_fixed(unsigned b, double r, u64 prime_limit) {
  if (b < 2) throw DomainError("constant_lcm_closed_k2: requires b >= 2");
  if (!(r > -1.0) || r == 0.0) throw DomainError("constant_lcm_closed_k2: requires r > -1 and r != 0");
  const ClosedForm cf = closed_form(b, r);
  const double P = static_cast<double>(prime_limit);
  const Majorant maj = closed_majorant(cf, r, P);

  CompensatedSum log_sum;
  for (u64 p : primes_up_to(prime_limit)) {
    const double u = 1.0 / static_cast<double>(p);
    log_sum += std::log1p(eval_poly(cf.W, u) / eval_poly(cf.D, u));
  }
  EulerProductConstant out;
  out.name = "Clcm_closed";
  out.b = b;
  out.k = 2;
  out.r = r;
  out.value = zeta_real(cf.A) * zeta_real(cf.B) * std::pow(zeta_real(2.0), -3.0) * std::exp(log_sum.value());
  const double eval_allowance = 5e-12;  // three zeta values at ~1e-12 each
  out.tail_bound = relative_bound(out.value, maj.log_tail(P) + eval_allowance);
  out.prime_limit = prime_limit;
  out.term_limit = static_cast<u64>(cf.W.size());
  return out;
}

EulerProductConstant constant_lcm_closed_k2(unsigned b, double r, double tol) {
  if (!(tol > 0.0)) throw DomainError("constant_lcm_closed_k2: tol must be positive");
  if (b < 2) throw DomainError("constant_lcm_closed_k2: requires b >= 2");
  if (!(r > -1.0) || r == 0.0) throw DomainError("constant_lcm_closed_k2: requires r > -1 and r != 0");
  const ClosedForm cf = closed_form(b, r);
  for (u64 P = 1024; P <= kMaxPrimeLimit; P *= 2) {
    if (closed_majorant(cf, r, static_cast<double>(P)).log_tail(static_cast<double>(P)) * 1.05 > tol &&
        P * 2 <= kMaxPrimeLimit)
      continue;
    auto c = constant_lcm_closed_k2_fixed(b, r, P);
    if (c.tail_bound <= tol) return c;
  }
  throw BudgetError("constant_lcm_closed_k2: tol unachievable under prime limit " + std::to_string(kMaxPrimeLimit));
}

LcmRouteComparison compare_lcm_routes(unsigned b, double r, double tol) {
  LcmRouteComparison cmp;
  cmp.general = constant_lcm_general(MultiplicativeFunctionSpec::power(r), 2, b, tol);
  std::ostringstream os;
  os.precision(15);
  try {
    cmp.closed = constant_lcm_closed_k2(b, r, tol);
  } catch (const DomainError& e) {
    os << "closed form could not be bounded: " << e.what();
    cmp.report = os.str();
    return cmp;
  }
  cmp.difference = cmp.general.value - cmp.closed.value;
  cmp.allowed = cmp.general.tail_bound + cmp.closed.tail_bound + 1e-13 * std::fabs(cmp.general.value);
  cmp.agree = std::fabs(cmp.difference) <= cmp.allowed;
  os << "b=" << b << " r=" << r << " general=" << cmp.general.value << " (+-" << cmp.general.tail_bound
     << ") closed=" << cmp.closed.value << " (+-" << cmp.closed.tail_bound << ") difference=" << cmp.difference
     << (cmp.agree ? " within" : " EXCEEDS") << " combined bound " << cmp.allowed;
  cmp.report = os.str();
  return cmp;
}

}  // namespace genmean
