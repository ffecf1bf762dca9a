#include <cmath>

#include "doctest.h"
#include "genmean/lattice.hpp"
#include "genmean/oracle.hpp"
#include "genmean/summatory.hpp"

using namespace genmean;

namespace {

const SieveTable& table_1e6() {
  static const SieveTable t = build_sieve(1'000'000);
  return t;
}

}  // namespace

TEST_CASE("sieve examples") {
  const auto t10 = build_sieve(10);
  CHECK(t10.spf[9] == 3);
  CHECK(t10.mobius[6] == 1);
  CHECK(t10.mobius[4] == 0);
  CHECK(build_sieve(30).mobius[30] == -1);
  CHECK(squarefree_identity_holds(table_1e6()));
  CHECK_THROWS_AS(build_sieve(kSieveLimit + 1), BudgetError);
}

TEST_CASE("sieve factorizations agree with trial division") {
  const auto& t = table_1e6();
  std::array<PrimePower, 15> buf;
  for (u64 n = 1; n <= 1'000'000; n += 997) {
    const std::size_t m = t.factor(n, buf);
    const auto ref = factorize(n);
    REQUIRE(m == ref.factors.size());
    for (std::size_t i = 0; i < m; ++i) REQUIRE(buf[i] == ref.factors[i]);
  }
  const auto primes = primes_up_to(100);
  CHECK(primes.size() == 25);
  CHECK(primes.back() == 97);
}

TEST_CASE("batch examples") {
  const auto t = build_sieve(20);
  const auto h = batch_values(FnId::h, 2, 16, t);
  CHECK(h.exact[4] == 5);
  CHECK(h.exact[16] == 22);
  CHECK(batch_values(FnId::phi, 2, 10, t).exact[8] == 6);
  CHECK(batch_values(FnId::xi, 2, 12, t).exact[12] == 0);
  const auto root = batch_values(FnId::chi_root, 2, 20, t);
  CHECK(root.exact[16] == 4);
  CHECK(root.exact[15] == 0);
}

TEST_CASE("batch values agree with the brute-force oracle") {
  using oracle::PointwiseKind;
  const auto t = build_sieve(1000);
  for (unsigned b = 1; b <= 4; ++b) {
    const auto h = batch_values(FnId::h, b, 1000, t);
    const auto ph = batch_values(FnId::phi, b, 1000, t);
    const auto hm = batch_values(FnId::harmonic_over_n, b, 1000, t);
    const auto ge = batch_values(FnId::geo_logsum, b, 1000, t);
    const auto& bh = oracle::brute_table(PointwiseKind::gen_gcd_sum, b, 1000);
    const auto& bp = oracle::brute_table(PointwiseKind::phi, b, 1000);
    const auto& bm = oracle::brute_table(PointwiseKind::harmonic, b, 1000);
    const auto& bg = oracle::brute_table(PointwiseKind::geo, b, 1000);
    for (u64 n = 1; n <= 1000; ++n) {
      REQUIRE(Rational(h.exact[n]) == std::get<Rational>(bh[n]));
      REQUIRE(Rational(ph.exact[n]) == std::get<Rational>(bp[n]));
      const double hn = std::get<Rational>(bm[n]).to_double() / static_cast<double>(n);
      REQUIRE(std::fabs(hm.real[n] - hn) <= 1e-15 * hn);
      REQUIRE(std::fabs(ge.real[n] - std::get<double>(bg[n])) <= 1e-9);
    }
  }
}

TEST_CASE("batch values agree with pointwise evaluation") {
  const auto& t = table_1e6();
  const auto h = batch_values(FnId::h, 3, 200000, t);
  const auto g = batch_values(FnId::geo_logsum, 2, 200000, t);
  for (u64 n = 1; n <= 200000; n += 31) {
    REQUIRE(h.exact[n] == h_b(n, 3));
    REQUIRE(g.real[n] == geo_logsum(n, 2));
  }
}

TEST_CASE("parallel kernel equals the serial reference") {
  const auto& t = table_1e6();
  for (FnId fn : {FnId::h, FnId::phi, FnId::harmonic_over_n, FnId::geo_logsum, FnId::chi, FnId::xi, FnId::chi_root}) {
    const auto ref = serial::batch_values(fn, 2, 300000, t);
    for (int threads : {1, 2, 4}) {
      const auto par = batch_values(fn, 2, 300000, t, threads);
      REQUIRE(par.exact == ref.exact);
      REQUIRE(par.real == ref.real);
    }
  }
}

TEST_CASE("summatory examples") {
  const auto w = summatory(FnId::h, 2, 3, 2, true);
  REQUIRE(w.checkpoints.size() == 2);
  const auto& c3 = w.checkpoints.back();
  CHECK(*c3.weighted_sum == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  // (3 S - M) / x with S = 6, M = 1 + 4 + 9
  CHECK(c3.exact_sum == 6);
  CHECK(c3.exact_moment == 14);
  CHECK(summatory(FnId::h, 2, 4, 2, false).checkpoints.back().exact_sum == 11);
  CHECK(summatory(FnId::xi, 2, 10, 2, false).checkpoints.back().exact_sum == 7);
  CHECK_THROWS_AS(summatory(FnId::h, 2, 200'000'000, 5, false), BudgetError);
}

TEST_CASE("checkpoint grid") {
  const auto g = checkpoint_grid(1, 1'000'000, 7);
  CHECK(g == std::vector<u64>{1, 10, 100, 1000, 10000, 100000, 1000000});
  const auto small = checkpoint_grid(1, 5, 20);
  CHECK(small.back() == 5);
  for (std::size_t i = 1; i < small.size(); ++i) CHECK(small[i] > small[i - 1]);
}

TEST_CASE("summatory is thread-count invariant and matches direct sums") {
  SummatoryOptions one;
  one.table = &table_1e6();
  one.block = 10007;
  const auto ref = summatory(FnId::harmonic_over_n, 2, 1'000'000, 12, true, one);
  for (int threads : {2, 3, 4}) {
    SummatoryOptions o = one;
    o.threads = threads;
    REQUIRE(summatory(FnId::harmonic_over_n, 2, 1'000'000, 12, true, o) == ref);
  }
  const auto phi = summatory(FnId::phi, 3, 100000, 6, true, one);
  u128 s = 0, m = 0;
  std::size_t next = 0;
  for (u64 n = 1; n <= 100000; ++n) {
    s += phi_b(n, 3);
    m += static_cast<u128>(n) * phi_b(n, 3);
    if (n == phi.checkpoints[next].x) {
      REQUIRE(phi.checkpoints[next].exact_sum == s);
      REQUIRE(phi.checkpoints[next].exact_moment == m);
      ++next;
    }
  }
  CHECK(next == phi.checkpoints.size());
}

TEST_CASE("lattice gcd sum examples") {
  const auto id = MultiplicativeFunctionSpec::identity();
  const auto t = build_sieve(1000);
  CHECK(lattice_gcd_sum(id, 2, 2, 4, t) == 17);
  CHECK(lattice_gcd_sum(id, 2, 2, 1, t) == 1);
  CHECK(lattice_gcd_sum(id, 3, 2, 4, t) == 65);
  CHECK(integer_root(1'000'000, 2) == 1000);
  CHECK(integer_root(999'999, 2) == 999);
  CHECK(integer_root(u64{18446744073709551615u}, 2) == 4294967295u);
  CHECK(integer_root(1'000'000'000'000'000'000u, 3) == 1'000'000);
}

TEST_CASE("lattice gcd sum equals brute force") {
  const auto t = build_sieve(1000);
  for (unsigned k : {2u, 3u}) {
    for (unsigned b : {2u, 3u}) {
      const u64 xmax = k == 2 ? 200 : 60;
      for (unsigned r : {0u, 1u, 2u}) {
        const auto f = MultiplicativeFunctionSpec::power(r);
        const auto brute = oracle::brute_lattice_prefix(oracle::LatticeKind::gcd_power, k, b, xmax, r);
        for (u64 x = 1; x <= xmax; ++x) REQUIRE(lattice_gcd_sum(f, k, b, x, t) == static_cast<i128>(brute[x]));
      }
    }
  }
}

TEST_CASE("diagonal and Moebius routes") {
  const auto& t = table_1e6();
  const auto id = MultiplicativeFunctionSpec::identity();
  for (unsigned b : {2u, 3u}) {
    for (u64 x : {1, 2, 17, 1000, 65536, 1'000'000}) {
      REQUIRE(static_cast<i128>(lattice_gcd_diagonal(b, x, t)) == lattice_gcd_sum(id, 2, b, x, t));
      i128 direct = 0;
      if (x <= 65536) {
        for (u64 n = 1; n <= x; ++n) direct += phi_b(n, b);
        REQUIRE(phi_b_summatory_mobius(b, x, t) == direct);
      }
    }
  }
}

TEST_CASE("lattice lcm sum") {
  CHECK(lattice_lcm_sum(2, 2, 1, 2) == 7);
  CHECK(lattice_lcm_sum(2, 2, 0, 5) == 25);
  CHECK(lattice_lcm_sum(2, 2, 1, 4) == oracle::brute_lattice(oracle::LatticeKind::lcm_power, 2, 2, 4, 1));
  for (unsigned k : {2u, 3u}) {
    for (unsigned b : {2u, 3u}) {
      const u64 xmax = k == 2 ? 80 : 25;
      std::vector<u64> xs;
      for (u64 x = 1; x <= xmax; ++x) xs.push_back(x);
      const auto brute = oracle::brute_lattice_prefix(oracle::LatticeKind::lcm_power, k, b, xmax, 1);
      const auto fast = lattice_lcm_prefix(k, b, 1, xs);
      for (u64 x = 1; x <= xmax; ++x) REQUIRE(fast[x - 1] == brute[x]);
    }
  }
  LatticeOptions four;
  four.threads = 4;
  CHECK(lattice_lcm_sum(2, 2, 1, 500, four) == lattice_lcm_sum(2, 2, 1, 500));
  LatticeOptions tiny;
  tiny.budget = 100;
  CHECK_THROWS_AS(lattice_lcm_sum(2, 2, 1, 500, tiny), BudgetError);
}

TEST_CASE("gcd-sum growth stays below n^{1+1/b+eps}") {
  const auto& t = table_1e6();
  for (unsigned b : {2u, 3u}) {
    const auto h = batch_values(FnId::h, b, 1'000'000, t);
    const double e = 1.0 + 1.0 / b + 0.1;
    for (u64 n = 2; n <= 1'000'000; ++n) REQUIRE(static_cast<double>(h.exact[n]) <= 10.0 * std::pow(n, e));
  }
}
