#include "genmean/lattice.hpp"

#include <omp.h>

#include <array>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>

#include "genmean/arith.hpp"

namespace genmean {

u64 integer_root(u64 x, unsigned b) {
  if (b == 0) throw DomainError("integer_root: b must be >= 1");
  if (b == 1 || x < 2) return x;
  auto fits = [&](u64 d) {
    u128 v = 1;
    for (unsigned i = 0; i < b; ++i) {
      v *= d;
      if (v > x) return false;
    }
    return true;
  };
  auto d = static_cast<u64>(std::pow(static_cast<double>(x), 1.0 / b));
  while (d > 0 && !fits(d)) --d;
  while (fits(d + 1)) ++d;
  return d;
}

i128 lattice_gcd_sum(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b, u64 x, const SieveTable& table) {
  if (k < 2) throw DomainError("lattice_gcd_sum: k must be >= 2");
  if (b < 1) throw DomainError("lattice_gcd_sum: b must be >= 1");
  const u64 dmax = integer_root(x, b);
  if (dmax > table.N) throw DomainError("lattice_gcd_sum: sieve too small for x^{1/b}");
  std::array<PrimePower, 15> buf;
  i128 total = 0;
  for (u64 d = 1; d <= dmax; ++d) {
    const std::size_t cnt = table.factor(d, buf);
    const i128 conv = f.eval_mobius_convolution(std::span<const PrimePower>(buf.data(), cnt));
    if (conv == 0) continue;
    const u64 q = x / narrow_u64(checked_pow(d, b));
    i128 qk = 1;
    for (unsigned i = 0; i < k; ++i) qk = checked_mul(qk, static_cast<i128>(q));
    total = checked_add(total, checked_mul(conv, qk));
  }
  return total;
}

u128 lattice_gcd_diagonal(unsigned b, u64 x, const SieveTable& table) {
  if (x > table.N) throw DomainError("lattice_gcd_diagonal: sieve too small");
  std::array<PrimePower, 15> buf;
  u128 twice_h = 0;
  u128 diag = 0;
  for (u64 n = 1; n <= x; ++n) {
    const std::span<const PrimePower> f(buf.data(), table.factor(n, buf));
    twice_h = checked_add(twice_h, 2 * u128{h_b(f, b)});
    u128 g = 1;
    for (const auto& pp : f) g *= checked_pow(pp.prime, pp.exponent / b);
    diag = checked_add(diag, g);
  }
  return twice_h - diag;
}

i128 phi_b_summatory_mobius(unsigned b, u64 x, const SieveTable& table) {
  const u64 dmax = integer_root(x, b);
  if (dmax > table.N) throw DomainError("phi_b_summatory_mobius: sieve too small");
  i128 total = 0;
  for (u64 d = 1; d <= dmax; ++d) {
    if (table.mobius[d] == 0) continue;
    const u64 m = x / narrow_u64(checked_pow(d, b));
    const i128 tri = static_cast<i128>(m) * (static_cast<i128>(m) + 1) / 2;
    total += table.mobius[d] * tri;
  }
  return total;
}

namespace {

// Factorizations of 1..X stored contiguously.
struct FactorBank {
  std::vector<std::uint32_t> offset;
  std::vector<PrimePower> entries;

  explicit FactorBank(u64 X) {
    const SieveTable table = build_sieve(X);
    offset.reserve(X + 2);
    offset.push_back(0);
    offset.push_back(0);  // n = 0 unused
    std::array<PrimePower, 15> buf;
    for (u64 n = 1; n <= X; ++n) {
      const std::size_t cnt = table.factor(n, buf);
      entries.insert(entries.end(), buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(cnt));
      offset.push_back(static_cast<std::uint32_t>(entries.size()));
    }
  }
  std::span<const PrimePower> of(u64 n) const { return {entries.data() + offset[n], entries.data() + offset[n + 1]}; }
};

// Merge b into a, keeping the larger exponent per prime.
void merge_max(const std::vector<PrimePower>& a, std::span<const PrimePower> b, std::vector<PrimePower>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].prime < a[i].prime) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].prime, std::max(a[i].exponent, b[j].exponent)});
      ++i;
      ++j;
    }
  }
}

struct LcmScan {
  unsigned k, b, r;
  u64 X;
  const FactorBank& bank;

  u128 leaf_value(const std::vector<PrimePower>& merged) const {
    u128 d = 1;
    for (const auto& pp : merged) d = checked_mul(d, checked_pow(pp.prime, (pp.exponent + b - 1) / b));
    u128 v = 1;
    for (unsigned i = 0; i < r; ++i) v = checked_mul(v, d);
    return v;
  }

  // depth = number of coordinates already fixed; levels[depth-1] holds the
  // merged factorization so far.
  void walk(unsigned depth, u64 current_max, std::vector<std::vector<PrimePower>>& levels,
            std::vector<u128>& buckets) const {
    if (depth == k) {
      buckets[current_max] = checked_add(buckets[current_max], leaf_value(levels[depth - 1]));
      return;
    }
    for (u64 n = 1; n <= X; ++n) {
      merge_max(levels[depth - 1], bank.of(n), levels[depth]);
      walk(depth + 1, std::max(current_max, n), levels, buckets);
    }
  }
};

}  // namespace

std::vector<u128> lattice_lcm_prefix(unsigned k, unsigned b, unsigned r, const std::vector<u64>& xs,
                                     const LatticeOptions& opts) {
  if (k < 2) throw DomainError("lattice_lcm_sum: k must be >= 2");
  if (b < 1) throw DomainError("lattice_lcm_sum: b must be >= 1");
  if (xs.empty()) return {};
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] <= xs[i - 1]) throw DomainError("lattice_lcm_sum: checkpoints must be strictly increasing");
  const u64 X = xs.back();
  if (xs.front() < 1) throw DomainError("lattice_lcm_sum: x must be >= 1");
  if (std::pow(static_cast<double>(X), k) > opts.budget)
    throw BudgetError("lattice_lcm_sum: " + std::to_string(X) + "^" + std::to_string(k) +
                      " tuples exceeds the work budget");

  const FactorBank bank(X);
  const LcmScan scan{k, b, r, X, bank};
  std::vector<u128> buckets(X + 1, 0);
  std::mutex mu;
  std::exception_ptr error;
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
  {
    std::vector<u128> local(X + 1, 0);
    std::vector<std::vector<PrimePower>> levels(k);
    bool ok = true;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 1; i <= static_cast<std::int64_t>(X); ++i) {
      if (!ok) continue;
      try {
        const auto n1 = static_cast<u64>(i);
        const auto f = bank.of(n1);
        levels[0].assign(f.begin(), f.end());
        scan.walk(1, n1, levels, local);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        ok = false;
      }
    }
    // Integer addition is exact, so the merge order does not matter.
    std::lock_guard lock(mu);
    try {
      for (u64 m = 1; m <= X; ++m) buckets[m] = checked_add(buckets[m], local[m]);
    } catch (...) {
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<u128> out;
  out.reserve(xs.size());
  u128 running = 0;
  std::size_t next = 0;
  for (u64 m = 1; m <= X && next < xs.size(); ++m) {
    running = checked_add(running, buckets[m]);
    if (m == xs[next]) {
      out.push_back(running);
      ++next;
    }
  }
  return out;
}

u128 lattice_lcm_sum(unsigned k, unsigned b, unsigned r, u64 x, const LatticeOptions& opts) {
  return lattice_lcm_prefix(k, b, r, std::vector<u64>{x}, opts).front();
}

}  // namespace genmean
