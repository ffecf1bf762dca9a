#include <cmath>
#include <numbers>

#include "doctest.h"
#include "genmean/analytic.hpp"
#include "genmean/compensated.hpp"
#include "genmean/multiplicative.hpp"
#include "genmean/sieve.hpp"

using namespace genmean;

namespace {

constexpr double pi = std::numbers::pi;

// -sum_{n<=N} log n / n^s, with the integral tail added
double zeta_deriv_direct(double s, u64 N) {
  CompensatedSum acc;
  for (u64 n = 2; n <= N; ++n) acc.add(-std::log(static_cast<double>(n)) * std::pow(static_cast<double>(n), -s));
  const double L = std::log(static_cast<double>(N)), a = s - 1;
  const double tail = std::pow(static_cast<double>(N), -a) * (L / a + 1.0 / (a * a));
  return acc.value() - tail;
}

}  // namespace

TEST_CASE("zeta at classical points") {
  CHECK(std::fabs(zeta_real(2) - pi * pi / 6) <= 1e-12);
  CHECK(std::fabs(zeta_real(4) - std::pow(pi, 4) / 90) <= 1e-12);
  CHECK(zeta_real(0) == -0.5);
  CHECK(std::fabs(zeta_real(-1) + 1.0 / 12) <= 1e-12);
  CHECK(std::fabs(zeta_real(-2)) <= 1e-12);
  CHECK(std::fabs(zeta_real(0.5) + 1.4603545088095868) <= 1e-12);
  CHECK_THROWS_AS(zeta_real(1.0), DomainError);
  for (double s : {1.5, 2.5, 3.0, 5.0, 7.5, 12.0, 30.0})
    CHECK(std::fabs(zeta_real(s) - std::riemann_zeta(s)) <= 1e-13 * std::riemann_zeta(s));
}

TEST_CASE("functional equation at s = -1/3") {
  const double s = -1.0 / 3.0;
  const double reflected = std::pow(2.0, s) * std::pow(pi, s - 1) * std::sin(pi * s / 2) * std::tgamma(1 - s) *
                           zeta_euler_maclaurin(1 - s);
  CHECK(std::fabs(zeta_euler_maclaurin(s) - reflected) <= 1e-9);
  CHECK(std::fabs(zeta_real(s) - reflected) <= 1e-9);
}

TEST_CASE("zeta derivative") {
  CHECK(std::fabs(zeta_deriv_real(20)) < 10 * std::log(2.0) / std::pow(2.0, 20));
  CHECK(zeta_deriv_real(20) < 0);
  CHECK(std::fabs(zeta_deriv_real(4) - zeta_deriv_direct(4, 1'000'000)) <= 1e-9);
  const double d2 = zeta_deriv_real(2);
  CHECK(d2 < -0.5);
  CHECK(d2 > -1.2);
  CHECK(std::fabs(d2 - zeta_deriv_direct(2, 1'000'000)) <= 1e-9);
  for (double s : {3.0, 6.0}) {
    const double h = 1e-5;
    const double fd = (zeta_real(s + h) - zeta_real(s - h)) / (2 * h);
    CHECK(std::fabs(zeta_deriv_real(s) - fd) <= 1e-8);
  }
}

TEST_CASE("gamma") {
  CHECK(std::fabs(gamma_real(1) - 1) <= 1e-14);
  CHECK(std::fabs(gamma_real(5) - 24) <= 1e-12);
  CHECK(std::fabs(gamma_real(0.5) - std::sqrt(pi)) <= 1e-10);
  CHECK(std::fabs(gamma_real(4.0 / 3.0) - gamma_real(1.0 / 3.0) / 3.0) <= 1e-10);
  CHECK_THROWS_AS(gamma_real(0), DomainError);
}

TEST_CASE("harmonic-mean constant") {
  CHECK(harmonic_first_term(2, 2) == Rational(2, 7));
  // first term of K against the exact fraction
  for (u64 p : {2, 3, 7}) {
    for (unsigned b : {2u, 3u}) {
      const double f1 = harmonic_local_factor(p, b, 1) - 1.0;
      CHECK(f1 == doctest::Approx(harmonic_first_term(p, b).to_double()).epsilon(1e-14));
    }
  }
  const auto c12 = constant_Cb(12, 1e-8);
  CHECK(c12.value > 0.999);
  CHECK(c12.value < 1.01);
  const auto c2 = constant_Cb(2, 1e-8);
  CHECK(c2.value > 1.0);
  CHECK(c2.value < 1.1);
  CHECK(c2.tail_bound <= 1e-8);
  CHECK(constant_Cb(2, 1e-8).value == c2.value);
  for (unsigned b : {2u, 3u, 5u}) {
    const auto c = constant_Cb(b, 1e-8);
    const auto d = constant_Cb_fixed(b, 2 * c.prime_limit, 2 * static_cast<unsigned>(c.term_limit));
    CHECK(std::fabs(d.value - c.value) < c.tail_bound);
  }
}

TEST_CASE("harmonic-mean constant against a direct product") {
  // (1 - 1/p) sum_e H_b(p^e) / p^e, with H_b(p^e) from counting j <= p^e by
  // the value of (j, p^e)_b
  for (unsigned b : {2u, 3u}) {
    CompensatedSum log_prod;
    for (u64 p : primes_up_to(3000)) {
      const double u = 1.0 / static_cast<double>(p);
      CompensatedSum series;
      for (unsigned e = 0; e <= 200; ++e) {
        double d = 0.0;
        for (unsigned a = 0; a * b <= e; ++a) {
          const double share = (a + 1) * b <= e ? std::pow(u, a * b) - std::pow(u, (a + 1) * b) : std::pow(u, a * b);
          d += share * std::pow(u, a);
        }
        series.add(std::pow(u, e) / d);
      }
      log_prod.add(std::log1p(series.value() * (1 - u) - 1.0));
    }
    const auto c = constant_Cb(b, 1e-8);
    CHECK(std::fabs(std::exp(log_prod.value()) - c.value) <= 1e-8 + c.tail_bound);
  }
}

TEST_CASE("lcm constants") {
  const auto one = MultiplicativeFunctionSpec::one();
  const auto id = MultiplicativeFunctionSpec::identity();
  for (u64 p : {2, 3, 101}) CHECK(std::fabs(lcm_local_factor(one, 2, 2, p, 200) - 1.0) <= 1e-12);
  const auto c1 = constant_lcm_general(one, 2, 2, 1e-4);
  CHECK(std::fabs(c1.value - 1.0) <= c1.tail_bound + 1e-12);
  double prev = 1.0;
  for (u64 p : {1009, 10007, 100003}) {
    const double dev = std::fabs(lcm_local_factor(id, 2, 2, p, 60) - 1.0);
    CHECK(dev < prev);
    prev = dev;
  }
  for (unsigned b : {2u, 3u}) {
    for (double r : {1.0, 2.0}) {
      const auto cmp = compare_lcm_routes(b, r, 1e-9);
      CHECK_MESSAGE(cmp.agree, cmp.report);
      CHECK(std::fabs(cmp.general.value - cmp.closed.value) <= 1e-8);
    }
  }
}

TEST_CASE("class membership") {
  CHECK(check_class_membership(MultiplicativeFunctionSpec::identity(), 10000, 6).ok);
  CHECK(check_class_membership(MultiplicativeFunctionSpec::power(2), 10000, 6).ok);
  auto bad = MultiplicativeFunctionSpec::identity();
  bad.prime_power_eval = [](u64 p, unsigned v) { return v == 1 ? 3.0 * static_cast<double>(p) : std::pow(p, v); };
  bad.exact_prime_power_eval = nullptr;
  bad.C1 = 0.5;
  CHECK_FALSE(check_class_membership(bad, 1000, 4).ok);
}

TEST_CASE("Dirichlet series") {
  const auto t = build_sieve(1'000'000);
  const double N = 1e6;
  for (unsigned b : {2u, 3u}) {
    const double zh = zeta_real(3.0 * b - 1) * zeta_real(2) / zeta_real(3.0 * b);
    CHECK(*dirichlet_closed_form(FnId::h, b, 3) == doctest::Approx(zh).epsilon(1e-14));
    CHECK(std::fabs(dirichlet_partial(FnId::h, b, 3, 1'000'000, &t) - zh) <= 10 * std::log(N) / N);
    const double zp = zeta_real(2) / zeta_real(3.0 * b);
    CHECK(std::fabs(dirichlet_partial(FnId::phi, b, 3, 1'000'000, &t) - zp) <= 10 / N);
  }
  const double z3 = zeta_real(3);
  CHECK(std::fabs(dirichlet_partial(FnId::chi_root, 2, 2, 1'000'000, &t) - z3) <= 10 / std::sqrt(N));
  // h = phi * chi_root as Dirichlet series
  for (unsigned b : {2u, 3u}) {
    const double prod = *dirichlet_closed_form(FnId::phi, b, 3) * *dirichlet_closed_form(FnId::chi_root, b, 3);
    CHECK(prod == doctest::Approx(*dirichlet_closed_form(FnId::h, b, 3)).epsilon(1e-14));
    const double emp = dirichlet_partial(FnId::phi, b, 3, 1'000'000, &t) *
                       dirichlet_partial(FnId::chi_root, b, 3, 1'000'000, &t);
    CHECK(std::fabs(emp - dirichlet_partial(FnId::h, b, 3, 1'000'000, &t)) <= 10 * std::log(N) / N + 20 / N);
  }
  CHECK(dirichlet_abscissa(FnId::h, 2) == doctest::Approx(2.0));
  CHECK(dirichlet_abscissa(FnId::phi, 2) == doctest::Approx(2.0));
}
