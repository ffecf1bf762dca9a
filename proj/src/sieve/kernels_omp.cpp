#include <omp.h>

#include <atomic>
#include <exception>
#include <mutex>
#include <string>

#include "genmean/kernels.hpp"

namespace genmean {

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

// Exceptions may not escape an OpenMP region; keep the first and rethrow.
class FirstError {
 public:
  void capture() {
    std::lock_guard lock(mu_);
    if (!error_) error_ = std::current_exception();
    failed_.store(true, std::memory_order_relaxed);
  }
  bool failed() const { return failed_.load(std::memory_order_relaxed); }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
  std::atomic<bool> failed_{false};
};

}  // namespace

void batch_block(FnId fn, Exponent b, u64 lo, u64 hi, const SieveTable& table, int threads, u64* exact_out,
                 double* real_out) {
  if (hi > table.N + 1) throw DomainError("batch_block: range exceeds sieve size " + std::to_string(table.N));
  if (lo < 1 || hi <= lo) return;
  const bool exact = is_exact(fn);
  const auto count = static_cast<std::int64_t>(hi - lo);
  FirstError err;
#pragma omp parallel for schedule(static, 4096) num_threads(resolve_threads(threads))
  for (std::int64_t i = 0; i < count; ++i) {
    if (err.failed()) continue;
    try {
      const u64 n = lo + static_cast<u64>(i);
      if (exact)
        exact_out[i] = exact_value_at(fn, b, n, table);
      else
        real_out[i] = real_value_at(fn, b, n, table);
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();
}

ValueTable batch_values(FnId fn, Exponent b, u64 N, const SieveTable& table, int threads) {
  if (N > table.N) throw DomainError("batch_values: N exceeds sieve size " + std::to_string(table.N));
  ValueTable out{fn, b.value(), N, {}, {}};
  if (is_exact(fn)) {
    out.exact.assign(N + 1, 0);
    batch_block(fn, b, 1, N + 1, table, threads, out.exact.data() + 1, nullptr);
  } else {
    out.real.assign(N + 1, 0.0);
    batch_block(fn, b, 1, N + 1, table, threads, nullptr, out.real.data() + 1);
  }
  return out;
}

}  // namespace genmean
