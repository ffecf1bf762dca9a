#include "genmean/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "genmean/compensated.hpp"

namespace genmean {
namespace {

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

i128 to_signed(u128 v) {
  if (v > static_cast<u128>(~static_cast<u128>(0) >> 1)) throw OverflowError("rational component overflow");
  return static_cast<i128>(v);
}

u128 value_of(std::span<const PrimePower> f) {
  u128 n = 1;
  for (const auto& pp : f) n = checked_mul(n, checked_pow(pp.prime, pp.exponent));
  return n;
}

}  // namespace

// ---- Rational -------------------------------------------------------------

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), abs128(den));
  if (g == 0) g = 1;
  num_ = num / static_cast<i128>(g);
  den_ = den / static_cast<i128>(g);
}

double Rational::to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rational::to_string() const { return genmean::to_string(num_) + "/" + genmean::to_string(den_); }

Rational operator*(const Rational& a, const Rational& b) {
  i128 g1 = static_cast<i128>(gcd128(abs128(a.num_), abs128(b.den_)));
  i128 g2 = static_cast<i128>(gcd128(abs128(b.num_), abs128(a.den_)));
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("division by zero rational");
  return a * Rational(b.den_, b.num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  i128 g = static_cast<i128>(gcd128(abs128(a.den_), abs128(b.den_)));
  i128 lhs = checked_mul(a.num_, b.den_ / g);
  i128 rhs = checked_mul(b.num_, a.den_ / g);
  return Rational(checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_));
}

// ---- prime-power values ---------------------------------------------------

namespace local {

u128 phi_b(u64 p, unsigned e, unsigned b) {
  if (e < b) return checked_pow(p, e);
  return checked_pow(p, e) - checked_pow(p, e - b);
}

u128 h_b(u64 p, unsigned e, unsigned b) {
  if (b == 1) {
    // Pillai: (id * phi)(p^e) = sum_{i=0}^{e} p^i phi(p^{e-i}).
    u128 total = checked_pow(p, e);
    for (unsigned i = 0; i < e; ++i) {
      u128 phi = checked_pow(p, e - i) - checked_pow(p, e - i - 1);
      total = checked_add(total, checked_mul(checked_pow(p, i), phi));
    }
    return total;
  }
  // e = kb + j: p^{k+j} + (p^b - 1) * sum_{l=1}^{k} p^{(k-l) + (l-1)b + j}
  const unsigned k = e / b;
  const unsigned j = e % b;
  u128 geometric = 0;
  for (unsigned l = 1; l <= k; ++l) geometric = checked_add(geometric, checked_pow(p, (k - l) + (l - 1) * b + j));
  return checked_add(checked_pow(p, k + j), checked_mul(checked_pow(p, b) - 1, geometric));
}

Rational harmonic_mean(u64 p, unsigned e, unsigned b) {
  const unsigned k = e / b;
  if (k == 0) return Rational(1);
  // p^{k(b+1)}(p^{b+1}-1) / (p^{k(b+1)}(p^{b+1}-p) + p - 1), with the common
  // factor p - 1 removed from both sides.
  u128 sigma_b = 0;
  u128 sigma_b1 = 0;
  for (unsigned i = 0; i <= b; ++i) {
    u128 pi = checked_pow(p, i);
    sigma_b = checked_add(sigma_b, pi);
    if (i < b) sigma_b1 = checked_add(sigma_b1, pi);
  }
  u128 pk = checked_pow(p, k * (b + 1));
  u128 num = checked_mul(pk, sigma_b);
  u128 den = checked_add(checked_mul(checked_mul(pk, p), sigma_b1), 1);
  return Rational(to_signed(num), to_signed(den));
}

u128 geo_coefficient(u64 p, unsigned e, unsigned b) {
  u128 total = 0;
  for (unsigned a = 1; a * b <= e; ++a) total = checked_add(total, checked_mul(a, phi_b(p, e - a * b, b)));
  return total;
}

}  // namespace local

// ---- factorization-based evaluation ----------------------------------------

int chi_b(std::span<const PrimePower> f, Exponent b) {
  return std::all_of(f.begin(), f.end(), [&](const PrimePower& pp) { return pp.exponent % b == 0; }) ? 1 : 0;
}

int xi_b(std::span<const PrimePower> f, Exponent b) {
  return std::all_of(f.begin(), f.end(), [&](const PrimePower& pp) { return pp.exponent < b; }) ? 1 : 0;
}

u64 chi_root(std::span<const PrimePower> f, Exponent b) {
  if (!chi_b(f, b)) return 0;
  u128 root = 1;
  for (const auto& pp : f) root = checked_mul(root, checked_pow(pp.prime, pp.exponent / b));
  return narrow_u64(root);
}

u64 phi_b(std::span<const PrimePower> f, Exponent b) {
  u128 v = 1;
  for (const auto& pp : f) v = checked_mul(v, local::phi_b(pp.prime, pp.exponent, b));
  return narrow_u64(v);
}

u64 h_b(std::span<const PrimePower> f, Exponent b) {
  u128 v = 1;
  for (const auto& pp : f) v = checked_mul(v, local::h_b(pp.prime, pp.exponent, b));
  return narrow_u64(v);
}

Rational harmonic_mean(std::span<const PrimePower> f, Exponent b) {
  Rational v(1);
  for (const auto& pp : f) v = v * local::harmonic_mean(pp.prime, pp.exponent, b);
  return v;
}

double geo_logsum(std::span<const PrimePower> f, Exponent b) {
  const u128 n = value_of(f);
  CompensatedSum sum;
  for (const auto& pp : f) {
    u128 coeff = local::geo_coefficient(pp.prime, pp.exponent, b);
    if (coeff == 0) continue;
    u128 cofactor = n / checked_pow(pp.prime, pp.exponent);
    sum += static_cast<double>(checked_mul(coeff, cofactor)) * std::log(static_cast<double>(pp.prime));
  }
  return sum.value();
}

// ---- pointwise API ---------------------------------------------------------

u64 gen_gcd(std::span<const u64> ns, Exponent b) {
  if (ns.empty()) throw DomainError("gen_gcd: empty sequence");
  u64 g = 0;
  for (u64 n : ns) {
    if (n == 0) throw DomainError("gen_gcd: entries must be positive");
    g = std::gcd(g, n);
  }
  // d^b | n_i for all i  <=>  d^b | gcd(n_i)
  u128 d = 1;
  for (const auto& pp : factorize(g).factors) d = checked_mul(d, checked_pow(pp.prime, pp.exponent / b));
  return narrow_u64(d);
}

u64 gen_lcm(std::span<const u64> ns, Exponent b) {
  if (ns.empty()) throw DomainError("gen_lcm: empty sequence");
  std::map<u64, unsigned> max_exp;
  for (u64 n : ns) {
    if (n == 0) throw DomainError("gen_lcm: entries must be positive");
    for (const auto& pp : factorize(n).factors) {
      unsigned& e = max_exp[pp.prime];
      e = std::max(e, pp.exponent);
    }
  }
  u128 d = 1;
  for (auto [p, e] : max_exp) d = checked_mul(d, checked_pow(p, (e + b - 1) / b));
  return narrow_u64(d);
}

int chi_b(u64 n, Exponent b) { return chi_b(factorize(n).view(), b); }
int xi_b(u64 n, Exponent b) { return xi_b(factorize(n).view(), b); }
u64 phi_b(u64 n, Exponent b) { return phi_b(factorize(n).view(), b); }
u64 h_b(u64 n, Exponent b) { return h_b(factorize(n).view(), b); }
Rational harmonic_mean(u64 n, Exponent b) { return harmonic_mean(factorize(n).view(), b); }
double geo_logsum(u64 n, Exponent b) { return geo_logsum(factorize(n).view(), b); }

}  // namespace genmean
