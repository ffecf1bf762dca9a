#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genmean/arith.hpp"
#include "genmean/sieve.hpp"

namespace genmean {

// Arithmetic functions that can be tabulated in bulk.
enum class FnId {
  h,                // h_b(n), exact
  phi,              // phi_b(n), exact
  harmonic_over_n,  // H_b(n)/n, real
  geo_logsum,       // n log G_b(n), real
  chi,              // chi_b(n), exact
  xi,               // xi_b(n), exact
  chi_root,         // n^{1/b} chi_b(n), exact
};

std::string_view fn_name(FnId fn);
std::optional<FnId> parse_fn(std::string_view name);
bool is_exact(FnId fn);

// Values for n = 1..N, stored at index n (index 0 is unused and zero).
// Exactly one of `exact` / `real` is populated, according to is_exact(fn).
struct ValueTable {
  FnId fn;
  unsigned b;
  u64 N;
  std::vector<u64> exact;
  std::vector<double> real;
};

/// f(n) for one n <= table.N, evaluated through the sieve's factorization and
/// the core prime-power formulas. Both kernels below call exactly this.
u64 exact_value_at(FnId fn, Exponent b, u64 n, const SieveTable& table);
double real_value_at(FnId fn, Exponent b, u64 n, const SieveTable& table);

/// OpenMP kernel. `threads` <= 0 means the OpenMP default.
ValueTable batch_values(FnId fn, Exponent b, u64 N, const SieveTable& table, int threads = 1);

/// Fills values for n in [lo, hi) into out[0 .. hi-lo); used by the blocked
/// summatory driver.
void batch_block(FnId fn, Exponent b, u64 lo, u64 hi, const SieveTable& table, int threads, u64* exact_out,
                 double* real_out);

namespace serial {
/// Reference single-threaded implementation, kept for tests and benchmarks.
ValueTable batch_values(FnId fn, Exponent b, u64 N, const SieveTable& table);
}  // namespace serial

}  // namespace genmean
