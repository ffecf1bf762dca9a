#include <array>
#include <string>

#include "genmean/kernels.hpp"

namespace genmean {

std::string_view fn_name(FnId fn) {
  switch (fn) {
    case FnId::h: return "h";
    case FnId::phi: return "phi";
    case FnId::harmonic_over_n: return "harmonic_over_n";
    case FnId::geo_logsum: return "geo";
    case FnId::chi: return "chi";
    case FnId::xi: return "xi";
    case FnId::chi_root: return "chi_root";
  }
  return "?";
}

std::optional<FnId> parse_fn(std::string_view name) {
  if (name == "h") return FnId::h;
  if (name == "phi") return FnId::phi;
  if (name == "harmonic_over_n" || name == "hmean_over_n") return FnId::harmonic_over_n;
  if (name == "geo" || name == "geo_logsum") return FnId::geo_logsum;
  if (name == "chi") return FnId::chi;
  if (name == "xi") return FnId::xi;
  if (name == "chi_root" || name == "chi_scaled") return FnId::chi_root;
  return std::nullopt;
}

bool is_exact(FnId fn) { return fn != FnId::harmonic_over_n && fn != FnId::geo_logsum; }

u64 exact_value_at(FnId fn, Exponent b, u64 n, const SieveTable& table) {
  std::array<PrimePower, 15> buf;
  const std::span<const PrimePower> f(buf.data(), table.factor(n, buf));
  switch (fn) {
    case FnId::h: return h_b(f, b);
    case FnId::phi: return phi_b(f, b);
    case FnId::chi: return static_cast<u64>(chi_b(f, b));
    case FnId::xi: return static_cast<u64>(xi_b(f, b));
    case FnId::chi_root: return chi_root(f, b);
    default: throw DomainError("exact_value_at: " + std::string(fn_name(fn)) + " is real valued");
  }
}

double real_value_at(FnId fn, Exponent b, u64 n, const SieveTable& table) {
  std::array<PrimePower, 15> buf;
  const std::span<const PrimePower> f(buf.data(), table.factor(n, buf));
  switch (fn) {
    case FnId::harmonic_over_n: return (harmonic_mean(f, b) / Rational(static_cast<i128>(n))).to_double();
    case FnId::geo_logsum: return geo_logsum(f, b);
    default: return static_cast<double>(exact_value_at(fn, b, n, table));
  }
}

namespace {
void check_range(u64 N, const SieveTable& table) {
  if (N > table.N) throw DomainError("batch_values: N exceeds sieve size " + std::to_string(table.N));
}
}  // namespace

namespace serial {

ValueTable batch_values(FnId fn, Exponent b, u64 N, const SieveTable& table) {
  check_range(N, table);
  ValueTable out{fn, b.value(), N, {}, {}};
  if (is_exact(fn)) {
    out.exact.assign(N + 1, 0);
    for (u64 n = 1; n <= N; ++n) out.exact[n] = exact_value_at(fn, b, n, table);
  } else {
    out.real.assign(N + 1, 0.0);
    for (u64 n = 1; n <= N; ++n) out.real[n] = real_value_at(fn, b, n, table);
  }
  return out;
}

}  // namespace serial
}  // namespace genmean
