#pragma once

#include <compare>
#include <span>
#include <string>

#include "genmean/factor.hpp"
#include "genmean/int128.hpp"

namespace genmean {

// The fixed exponent b of the generalized gcd/lcm. Always >= 1.
class Exponent {
 public:
  Exponent(int b) : b_(validate(b)) {}  // NOLINT: implicit on purpose, validated
  unsigned value() const { return b_; }
  operator unsigned() const { return b_; }  // NOLINT

 private:
  static unsigned validate(int b) {
    if (b < 1) throw DomainError("exponent b must be >= 1");
    return static_cast<unsigned>(b);
  }
  unsigned b_;
};

// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(i128 num, i128 den = 1);

  i128 num() const { return num_; }
  i128 den() const { return den_; }
  double to_double() const;
  std::string to_string() const;  // always "p/q"

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

/// Largest d with d^b dividing every element of ns. Throws on empty input.
u64 gen_gcd(std::span<const u64> ns, Exponent b);

/// Smallest d with every element of ns dividing d^b. Throws OverflowError
/// when d does not fit 64 bits.
u64 gen_lcm(std::span<const u64> ns, Exponent b);

int chi_b(u64 n, Exponent b);  // 1 iff n is a perfect b-th power
int xi_b(u64 n, Exponent b);   // 1 iff n is b-free

u64 phi_b(u64 n, Exponent b);
u64 h_b(u64 n, Exponent b);
Rational harmonic_mean(u64 n, Exponent b);
double geo_logsum(u64 n, Exponent b);

// Evaluation from an existing factorization. These are the paths shared with
// the bulk kernels, so pointwise and batch results are identical.
int chi_b(std::span<const PrimePower> f, Exponent b);
int xi_b(std::span<const PrimePower> f, Exponent b);
u64 phi_b(std::span<const PrimePower> f, Exponent b);
u64 h_b(std::span<const PrimePower> f, Exponent b);
Rational harmonic_mean(std::span<const PrimePower> f, Exponent b);
double geo_logsum(std::span<const PrimePower> f, Exponent b);
u64 chi_root(std::span<const PrimePower> f, Exponent b);  // n^{1/b} if n is a b-th power, else 0

namespace local {
// Values at a single prime power p^e.
u128 phi_b(u64 p, unsigned e, unsigned b);
u128 h_b(u64 p, unsigned e, unsigned b);
Rational harmonic_mean(u64 p, unsigned e, unsigned b);
// Sum over a = 1..floor(e/b) of a * phi_b(p^{e - a b}); the coefficient of
// log p in the local contribution to n log G_b(n).
u128 geo_coefficient(u64 p, unsigned e, unsigned b);
}  // namespace local

}  // namespace genmean
