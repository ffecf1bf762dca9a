#pragma once

#include <vector>

#include "genmean/multiplicative.hpp"
#include "genmean/sieve.hpp"

namespace genmean {

/// floor(x^{1/b}) computed exactly.
u64 integer_root(u64 x, unsigned b);

/// sum_{d <= x^{1/b}} (f * mu)(d) floor(x / d^b)^k, which equals
/// sum over n_1..n_k <= x of f((n_1, ..., n_k)_b). Needs table.N >= x^{1/b}.
i128 lattice_gcd_sum(const MultiplicativeFunctionSpec& f, unsigned k, unsigned b, u64 x, const SieveTable& table);

/// The k = 2, f = id case through the diagonal: 2 sum h_b(n) - sum (n, n)_b.
/// Needs table.N >= x.
u128 lattice_gcd_diagonal(unsigned b, u64 x, const SieveTable& table);

/// sum_{n <= x} phi_b(n) as sum_{d <= x^{1/b}} mu(d) T(floor(x / d^b)) with
/// T(m) = m(m+1)/2.
i128 phi_b_summatory_mobius(unsigned b, u64 x, const SieveTable& table);

struct LatticeOptions {
  int threads = 1;
  double budget = 2e9;  // maximum number of k-tuples scanned
};

/// Exact sum of [n_1, ..., n_k]_b^r over the cube [1, x]^k by full scan.
/// Parallel over n_1; integer partial sums make the result thread-count
/// independent.
u128 lattice_lcm_sum(unsigned k, unsigned b, unsigned r, u64 x, const LatticeOptions& opts = {});

/// Values of the same sum at every x in `xs` (strictly increasing) from one
/// scan of the largest cube: each tuple is charged to max(n_i).
std::vector<u128> lattice_lcm_prefix(unsigned k, unsigned b, unsigned r, const std::vector<u64>& xs,
                                     const LatticeOptions& opts = {});

}  // namespace genmean
