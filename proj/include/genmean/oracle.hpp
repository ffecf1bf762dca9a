#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <variant>
#include <vector>

#include "genmean/arith.hpp"
#include "genmean/multiplicative.hpp"

// Definition-level reference implementations. Nothing here calls the
// factorization-based code paths; every value comes from scanning j = 1..n
// and testing divisibility directly.
namespace genmean::oracle {

struct OracleBudget {
  u64 max_n = 10'000;
  u64 max_pairs = 100'000'000;
};

enum class PointwiseKind { gen_gcd_sum, phi, harmonic, geo, chi, xi };

// Integer-valued kinds come back as Rational with denominator 1; geo is real.
using OracleValue = std::variant<Rational, double>;

/// (j, n)_b by scanning d = 1, 2, ... while d^b <= min(j, n).
u64 brute_gen_gcd(u64 j, u64 n, unsigned b);

OracleValue brute_pointwise(PointwiseKind kind, u64 n, unsigned b, const OracleBudget& budget = {});

/// Values for n = 1..N (index n; index 0 unused). Cached per (kind, b), the
/// cache grows to the largest N requested.
const std::vector<OracleValue>& brute_table(PointwiseKind kind, unsigned b, u64 N, const OracleBudget& budget = {});

enum class LatticeKind { gcd_power, lcm_power };

/// Full k-fold scan of sum f((n_1..n_k)_b) or sum [n_1..n_k]_b^r with
/// f = id^r. Throws BudgetError when x^k > max_pairs.
u128 brute_lattice(LatticeKind kind, unsigned k, unsigned b, u64 x, unsigned r, const OracleBudget& budget = {});

/// brute_lattice at every x' = 1..x (index x'; index 0 is 0), from one scan.
std::vector<u128> brute_lattice_prefix(LatticeKind kind, unsigned k, unsigned b, u64 x, unsigned r,
                                       const OracleBudget& budget = {});

/// sum_{k=1}^{j} f(gcd(k, j)) with f evaluated from a trial-division
/// factorization of each gcd.
OracleValue cesaro_lhs(u64 j, const MultiplicativeFunctionSpec& f);

/// The right-hand side sum_{d | j} f(d) phi(j / d), with phi counted
/// directly. Kept next to cesaro_lhs so tests compare two scans.
OracleValue cesaro_rhs(u64 j, const MultiplicativeFunctionSpec& f);

}  // namespace genmean::oracle
