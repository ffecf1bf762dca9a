#pragma once

#include <optional>
#include <vector>

#include "genmean/kernels.hpp"

namespace genmean {

struct Checkpoint {
  u64 x = 0;
  // Exact running sums, populated for integer-valued functions.
  u128 exact_sum = 0;     // sum_{n<=x} f(n)
  u128 exact_moment = 0;  // sum_{n<=x} n f(n)
  // Real view; for integer-valued functions these are conversions of the
  // exact sums, otherwise compensated sums.
  double plain_sum = 0.0;
  double moment = 0.0;
  // sum_{n<=x} (1 - n/x) f(n) = S(x) - moment / x, when requested.
  std::optional<double> weighted_sum;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct SummatorySeries {
  FnId fn;
  unsigned b;
  bool exact = false;
  bool weighted = false;
  std::vector<Checkpoint> checkpoints;

  friend bool operator==(const SummatorySeries&, const SummatorySeries&) = default;
};

struct SummatoryOptions {
  u64 x_min = 1;          // smallest checkpoint
  int threads = 1;        // <= 0: OpenMP default
  u64 block = 1u << 16;   // values are produced block by block
  const SieveTable* table = nullptr;  // built on demand when null
};

/// floor(x_min * (xmax/x_min)^{i/(m-1)}) for i = 0..m-1; the last point is
/// exactly xmax and duplicates are dropped, so the result is strictly
/// increasing and may hold fewer than m points.
std::vector<u64> checkpoint_grid(u64 x_min, u64 xmax, std::size_t m);

/// Partial sums of f at geometric checkpoints. Values are computed in
/// parallel blocks but accumulated serially in index order, so the result
/// does not depend on the thread count.
SummatorySeries summatory(FnId fn, Exponent b, u64 xmax, std::size_t num_checkpoints, bool weighted,
                          const SummatoryOptions& opts = {});

/// Same, at caller-chosen checkpoints (strictly increasing, last <= sieve).
SummatorySeries summatory_at(FnId fn, Exponent b, const std::vector<u64>& xs, bool weighted,
                             const SummatoryOptions& opts = {});

}  // namespace genmean
