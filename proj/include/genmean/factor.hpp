#pragma once

#include <span>
#include <vector>

#include "genmean/int128.hpp"

namespace genmean {

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// An integer together with its canonical factorization.
//
// Invariants: the product of prime^exponent over `factors` equals `value`,
// primes are strictly increasing, exponents are >= 1, and value == 1 exactly
// when `factors` is empty.
struct FactoredInteger {
  u64 value = 1;
  std::vector<PrimePower> factors;

  std::span<const PrimePower> view() const { return factors; }
  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Canonical factorization of 1 <= n <= 2^63 - 1 (trial division, then
/// Pollard-Brent rho on the cofactor). Throws DomainError for n = 0 or n
/// above the supported range.
FactoredInteger factorize(u64 n);

}  // namespace genmean
