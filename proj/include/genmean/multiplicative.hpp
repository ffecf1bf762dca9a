#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "genmean/factor.hpp"
#include "genmean/int128.hpp"

namespace genmean {

// A multiplicative function given by its values at prime powers, together
// with the growth data (r, C1, C2) of the class A_r:
//   |f(p) - p^r| <= C1 p^{r - 1/2},   |f(p^v)| <= C2 p^{v r}  (v >= 2).
struct MultiplicativeFunctionSpec {
  std::string name;
  std::function<double(u64 p, unsigned v)> prime_power_eval;
  // Present when f is integer valued; used by the exact lattice sums.
  std::function<i128(u64 p, unsigned v)> exact_prime_power_eval;
  double r = 0.0;
  double C1 = 0.0;
  double C2 = 1.0;
  // Set when f(p^v) = p^{v r} exactly (so f(p) = p^r with C1 = 0).
  bool is_power = false;

  bool has_exact() const { return static_cast<bool>(exact_prime_power_eval); }

  double eval(std::span<const PrimePower> f) const;
  i128 eval_exact(std::span<const PrimePower> f) const;
  // (f * mu)(n) = prod over p^e || n of f(p^e) - f(p^{e-1}).
  i128 eval_mobius_convolution(std::span<const PrimePower> f) const;

  /// id^r. Exact integer values when r is a nonnegative integer.
  static MultiplicativeFunctionSpec power(double r);
  static MultiplicativeFunctionSpec identity() { return power(1.0); }
  static MultiplicativeFunctionSpec one() { return power(0.0); }
};

struct ClassCheck {
  bool ok = true;
  u64 worst_prime = 0;
  unsigned worst_exponent = 0;
};

/// Checks the class-A_r inequalities on all primes up to prime_limit and
/// exponents 2..max_exponent.
ClassCheck check_class_membership(const MultiplicativeFunctionSpec& f, u64 prime_limit, unsigned max_exponent);

}  // namespace genmean
