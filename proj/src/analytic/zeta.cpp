#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "genmean/analytic.hpp"
#include "genmean/compensated.hpp"

namespace genmean {

namespace {

// B_2, B_4, ..., B_30
constexpr std::array<double, 15> kBernoulli = {
    1.0 / 6,           -1.0 / 30,           1.0 / 42,
    -1.0 / 30,         5.0 / 66,            -691.0 / 2730,
    7.0 / 6,           -3617.0 / 510,       43867.0 / 798,
    -174611.0 / 330,   854513.0 / 138,      -236364091.0 / 2730,
    8553103.0 / 6,     -23749461029.0 / 870, 8615841276005.0 / 14322,
};

// B_{2j} / (2j)!
const std::array<double, 15>& em_coefficients() {
  static const std::array<double, 15> c = [] {
    std::array<double, 15> out{};
    double fact = 1.0;
    for (std::size_t j = 0; j < out.size(); ++j) {
      const double two_j = 2.0 * static_cast<double>(j + 1);
      fact *= (two_j - 1) * two_j;
      out[j] = kBernoulli[j] / fact;
    }
    return out;
  }();
  return c;
}

unsigned cutoff(double s) { return 32u + static_cast<unsigned>(std::ceil(std::fabs(s))); }

}  // namespace

double zeta_euler_maclaurin(double s) {
  if (s == 1.0) throw DomainError("zeta: pole at s = 1");
  const unsigned N = cutoff(s);
  const double Nd = N;
  CompensatedSum sum;
  for (unsigned n = N - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
  sum += std::pow(Nd, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(Nd, -s);
  // B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}
  const auto& c = em_coefficients();
  double rising = s;  // s(s+1)...(s+2j-2)
  double npow = std::pow(Nd, -s - 1.0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j > 0) {
      rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
      npow /= Nd * Nd;
    }
    sum += c[j] * rising * npow;
  }
  return sum.value();
}

double zeta_real(double s) {
  if (!std::isfinite(s)) throw DomainError("zeta: non-finite argument");
  if (s == 1.0) throw DomainError("zeta: pole at s = 1");
  if (s == 0.0) return -0.5;
  if (s > 0.0) return zeta_euler_maclaurin(s);
  // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
  const double pi = std::numbers::pi;
  return std::pow(2.0, s) * std::pow(pi, s - 1.0) * std::sin(pi * s / 2.0) * gamma_real(1.0 - s) *
         zeta_euler_maclaurin(1.0 - s);
}

double zeta_deriv_real(double s) {
  if (!(s > 1.5)) throw DomainError("zeta_deriv_real: requires s > 1.5");
  const unsigned N = cutoff(s);
  const double Nd = N;
  const double logN = std::log(Nd);
  CompensatedSum sum;
  for (unsigned n = N - 1; n >= 2; --n) sum += -std::log(static_cast<double>(n)) * std::pow(static_cast<double>(n), -s);
  // d/ds N^{1-s}/(s-1) and d/ds N^{-s}/2
  const double a = std::pow(Nd, 1.0 - s);
  sum += -logN * a / (s - 1.0) - a / ((s - 1.0) * (s - 1.0));
  sum += -0.5 * logN * std::pow(Nd, -s);
  // d/ds [c_j P_j(s) N^{-s-2j+1}] = c_j N^{...} (P_j(s) sum_i 1/(s+i) - log N P_j(s))
  const auto& c = em_coefficients();
  double rising = s;
  double inv_sum = 1.0 / s;
  double npow = std::pow(Nd, -s - 1.0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j > 0) {
      const double a1 = s + 2.0 * j - 1.0;
      const double a2 = s + 2.0 * j;
      rising *= a1 * a2;
      inv_sum += 1.0 / a1 + 1.0 / a2;
      npow /= Nd * Nd;
    }
    sum += c[j] * npow * rising * (inv_sum - logN);
  }
  return sum.value();
}

double gamma_real(double x) {
  if (!(x > 0.0)) throw DomainError("gamma_real: requires x > 0");
  return std::tgamma(x);
}

}  // namespace genmean
