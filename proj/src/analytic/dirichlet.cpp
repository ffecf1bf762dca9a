#include <cmath>
#include <string>

#include "genmean/analytic.hpp"
#include "genmean/compensated.hpp"

namespace genmean {

double dirichlet_abscissa(FnId fn, unsigned b) {
  switch (fn) {
    case FnId::h:
    case FnId::phi:
    case FnId::geo_logsum: return 2.0;
    case FnId::harmonic_over_n: return 0.0;
    case FnId::chi_root: return 2.0 / b;
    case FnId::chi: return 1.0 / b;
    case FnId::xi: return 1.0;
  }
  return 2.0;
}

double dirichlet_partial(FnId fn, unsigned b, double s, u64 N, const SieveTable* table) {
  if (!(s > dirichlet_abscissa(fn, b)))
    throw DomainError("dirichlet_partial: s outside the half-plane of absolute convergence for " +
                      std::string(fn_name(fn)));
  SieveTable owned;
  if (table == nullptr || table->N < N) {
    owned = build_sieve(N);
    table = &owned;
  }
  CompensatedSum sum;
  for (u64 n = 1; n <= N; ++n) {
    const double a = real_value_at(fn, b, n, *table);
    if (a != 0.0) sum += a * std::pow(static_cast<double>(n), -s);
  }
  return sum.value();
}

std::optional<double> dirichlet_closed_form(FnId fn, unsigned b, double s) {
  if (!(s > dirichlet_abscissa(fn, b))) throw DomainError("dirichlet_closed_form: s outside the convergence region");
  const double bs = b * s;
  switch (fn) {
    case FnId::h: return zeta_real(bs - 1.0) * zeta_real(s - 1.0) / zeta_real(bs);
    case FnId::phi: return zeta_real(s - 1.0) / zeta_real(bs);
    case FnId::chi_root: return zeta_real(bs - 1.0);
    case FnId::chi: return zeta_real(bs);
    case FnId::xi: return zeta_real(s) / zeta_real(bs);
    case FnId::geo_logsum: return -zeta_real(s - 1.0) * zeta_deriv_real(bs) / zeta_real(bs);
    case FnId::harmonic_over_n: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace genmean
