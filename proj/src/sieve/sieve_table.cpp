#include "genmean/sieve.hpp"

#include <cmath>
#include <string>

namespace genmean {

std::size_t SieveTable::factor(u64 n, std::array<PrimePower, 15>& out) const {
  std::size_t count = 0;
  while (n > 1) {
    const u64 p = spf[n];
    unsigned e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out[count++] = {p, e};
  }
  return count;
}

SieveTable build_sieve(u64 N) {
  if (N > kSieveLimit) throw BudgetError("build_sieve: N = " + std::to_string(N) + " exceeds the memory guard");
  SieveTable t;
  t.N = N;
  t.spf.assign(N + 1, 0);
  t.mobius.assign(N + 1, 0);
  if (N >= 1) t.mobius[1] = 1;
  std::vector<std::uint32_t> primes;
  for (u64 i = 2; i <= N; ++i) {
    if (t.spf[i] == 0) {
      t.spf[i] = static_cast<std::uint32_t>(i);
      t.mobius[i] = -1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      const u64 m = static_cast<u64>(p) * i;
      if (p > t.spf[i] || m > N) break;
      t.spf[m] = p;
      t.mobius[m] = (p == t.spf[i]) ? 0 : static_cast<std::int8_t>(-t.mobius[i]);
    }
  }
  return t;
}

bool squarefree_identity_holds(const SieveTable& table) {
  const u64 N = table.N;
  u64 lhs = 0;
  for (u64 n = 1; n <= N; ++n) lhs += table.mobius[n] != 0 ? 1 : 0;
  i64 rhs = 0;
  for (u64 d = 1; d * d <= N; ++d) rhs += table.mobius[d] * static_cast<i64>(N / (d * d));
  return static_cast<i64>(lhs) == rhs;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  // index i represents 2i + 1
  const u64 half = (limit - 1) / 2;
  std::vector<bool> composite(half + 1, false);
  for (u64 i = 1; i <= half; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    primes.push_back(p);
    for (u64 j = (p * p - 1) / 2; j <= half; j += p) composite[j] = true;
  }
  return primes;
}

}  // namespace genmean
