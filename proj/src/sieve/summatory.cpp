#include "genmean/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "genmean/compensated.hpp"

namespace genmean {

std::vector<u64> checkpoint_grid(u64 x_min, u64 xmax, std::size_t m) {
  if (m < 2) throw DomainError("need at least 2 checkpoints");
  if (x_min < 1 || x_min > xmax) throw DomainError("checkpoint range must satisfy 1 <= x_min <= xmax");
  std::vector<u64> xs;
  const double ratio = std::log(static_cast<double>(xmax) / static_cast<double>(x_min));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(m - 1);
    // the nudge keeps exact powers such as 10^5 from rounding down to 99999
    auto x = static_cast<u64>(std::floor(static_cast<double>(x_min) * std::exp(ratio * t) * (1 + 1e-12)));
    x = std::clamp<u64>(x, x_min, xmax);
    if (xs.empty() || x > xs.back()) xs.push_back(x);
  }
  if (xs.empty() || xs.back() < xmax) xs.push_back(xmax);
  return xs;
}

SummatorySeries summatory_at(FnId fn, Exponent b, const std::vector<u64>& xs, bool weighted,
                             const SummatoryOptions& opts) {
  if (xs.empty()) throw DomainError("summatory: no checkpoints");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] <= xs[i - 1]) throw DomainError("summatory: checkpoints must be strictly increasing");
  if (xs.front() < 1) throw DomainError("summatory: checkpoints must be >= 1");
  const u64 xmax = xs.back();

  SieveTable owned;
  const SieveTable* table = opts.table;
  if (table == nullptr || table->N < xmax) {
    owned = build_sieve(xmax);
    table = &owned;
  }

  SummatorySeries series{fn, b.value(), is_exact(fn), weighted, {}};
  series.checkpoints.reserve(xs.size());

  const u64 block = std::max<u64>(opts.block, 1);
  std::vector<u64> exact_buf(series.exact ? block : 0);
  std::vector<double> real_buf(series.exact ? 0 : block);

  u128 sum = 0;
  u128 moment = 0;
  CompensatedSum rsum;
  CompensatedSum rmoment;
  std::size_t next = 0;

  for (u64 lo = 1; lo <= xmax; lo += block) {
    const u64 hi = std::min(xmax + 1, lo + block);
    batch_block(fn, b, lo, hi, *table, opts.threads, exact_buf.data(), real_buf.data());
    for (u64 n = lo; n < hi; ++n) {
      if (series.exact) {
        const u64 v = exact_buf[n - lo];
        sum = checked_add(sum, u128{v});
        moment = checked_add(moment, checked_mul(u128{v}, u128{n}));
      } else {
        const double v = real_buf[n - lo];
        rsum += v;
        rmoment += v * static_cast<double>(n);
      }
      if (n == xs[next]) {
        Checkpoint cp;
        cp.x = n;
        if (series.exact) {
          cp.exact_sum = sum;
          cp.exact_moment = moment;
          cp.plain_sum = static_cast<double>(sum);
          cp.moment = static_cast<double>(moment);
          if (weighted) {
            // (x S - M) / x with the numerator formed exactly; M <= x S always.
            const u128 num = checked_mul(sum, u128{n}) - moment;
            cp.weighted_sum = static_cast<double>(num / n) + static_cast<double>(num % n) / static_cast<double>(n);
          }
        } else {
          cp.plain_sum = rsum.value();
          cp.moment = rmoment.value();
          if (weighted) cp.weighted_sum = cp.plain_sum - cp.moment / static_cast<double>(n);
        }
        series.checkpoints.push_back(cp);
        ++next;
      }
    }
  }
  return series;
}

SummatorySeries summatory(FnId fn, Exponent b, u64 xmax, std::size_t num_checkpoints, bool weighted,
                          const SummatoryOptions& opts) {
  if (xmax > kSieveLimit) throw BudgetError("summatory: xmax = " + std::to_string(xmax) + " exceeds the sieve limit");
  return summatory_at(fn, b, checkpoint_grid(std::min(opts.x_min, xmax), xmax, num_checkpoints), weighted, opts);
}

}  // namespace genmean
