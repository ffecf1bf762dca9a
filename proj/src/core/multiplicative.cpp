#include "genmean/multiplicative.hpp"

#include <cmath>

#include "genmean/sieve.hpp"

namespace genmean {

double MultiplicativeFunctionSpec::eval(std::span<const PrimePower> f) const {
  double v = 1.0;
  for (const auto& pp : f) v *= prime_power_eval(pp.prime, pp.exponent);
  return v;
}

i128 MultiplicativeFunctionSpec::eval_exact(std::span<const PrimePower> f) const {
  if (!has_exact()) throw DomainError(name + ": no exact evaluator");
  i128 v = 1;
  for (const auto& pp : f) v = checked_mul(v, exact_prime_power_eval(pp.prime, pp.exponent));
  return v;
}

i128 MultiplicativeFunctionSpec::eval_mobius_convolution(std::span<const PrimePower> f) const {
  if (!has_exact()) throw DomainError(name + ": no exact evaluator");
  i128 v = 1;
  for (const auto& pp : f) {
    i128 local = exact_prime_power_eval(pp.prime, pp.exponent) - exact_prime_power_eval(pp.prime, pp.exponent - 1);
    v = checked_mul(v, local);
  }
  return v;
}

MultiplicativeFunctionSpec MultiplicativeFunctionSpec::power(double r) {
  MultiplicativeFunctionSpec f;
  f.r = r;
  f.C1 = 0.0;
  f.C2 = 1.0;
  f.is_power = true;
  f.prime_power_eval = [r](u64 p, unsigned v) { return std::pow(static_cast<double>(p), r * v); };
  if (r >= 0 && r == std::floor(r) && r <= 64) {
    const auto ir = static_cast<unsigned>(r);
    f.exact_prime_power_eval = [ir](u64 p, unsigned v) {
      u128 value = checked_pow(p, ir * v);
      if (value > static_cast<u128>(~static_cast<u128>(0) >> 1)) throw OverflowError("f(p^v) exceeds 127 bits");
      return static_cast<i128>(value);
    };
    f.name = ir == 0 ? "one" : (ir == 1 ? "id" : "id^" + std::to_string(ir));
  } else {
    f.name = "id^" + std::to_string(r);
  }
  return f;
}

ClassCheck check_class_membership(const MultiplicativeFunctionSpec& f, u64 prime_limit, unsigned max_exponent) {
  ClassCheck result;
  const double slack = 1e-9;
  for (u64 p : primes_up_to(prime_limit)) {
    const double pd = static_cast<double>(p);
    const double fp = f.prime_power_eval(p, 1);
    if (std::fabs(fp - std::pow(pd, f.r)) > f.C1 * std::pow(pd, f.r - 0.5) + slack * std::pow(pd, f.r)) {
      return {false, p, 1};
    }
    for (unsigned v = 2; v <= max_exponent; ++v) {
      const double bound = f.C2 * std::pow(pd, v * f.r);
      if (!std::isfinite(bound)) break;
      if (std::fabs(f.prime_power_eval(p, v)) > bound * (1 + slack)) return {false, p, v};
    }
  }
  return result;
}

}  // namespace genmean
