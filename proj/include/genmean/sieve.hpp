#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "genmean/factor.hpp"
#include "genmean/int128.hpp"

namespace genmean {

inline constexpr u64 kSieveLimit = 100'000'000;

// Smallest-prime-factor and Moebius tables for 1..N.
struct SieveTable {
  u64 N = 0;
  std::vector<std::uint32_t> spf;    // spf[n] for 2 <= n <= N; spf[0] = spf[1] = 0
  std::vector<std::int8_t> mobius;   // mu(n) for 1 <= n <= N

  // Writes the factorization of n (1 <= n <= N) into `out`; returns the
  // number of distinct primes. 15 slots cover every n < 2^64.
  std::size_t factor(u64 n, std::array<PrimePower, 15>& out) const;
};

/// Linear sieve. Throws BudgetError above kSieveLimit.
SieveTable build_sieve(u64 N);

/// Checks sum_{n<=N} mu(n)^2 == sum_{d<=sqrt N} mu(d) floor(N/d^2).
bool squarefree_identity_holds(const SieveTable& table);

/// All primes <= limit (plain Eratosthenes on odd numbers).
std::vector<u64> primes_up_to(u64 limit);

}  // namespace genmean
