#include "genmean/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "genmean/compensated.hpp"

namespace genmean::oracle {

namespace {

// d^b, or limit + 1 if it exceeds limit.
u64 pow_capped(u64 d, unsigned b, u64 limit) {
  u128 v = 1;
  for (unsigned i = 0; i < b; ++i) {
    v *= d;
    if (v > limit) return limit + 1;
  }
  return static_cast<u64>(v);
}

struct PowerDivisor {
  u64 d;
  u64 db;  // d^b
};

// All d with d^b | n, largest first.
std::vector<PowerDivisor> power_divisors(u64 n, unsigned b) {
  std::vector<PowerDivisor> out;
  for (u64 d = 1;; ++d) {
    const u64 db = pow_capped(d, b, n);
    if (db > n) break;
    if (n % db == 0) out.push_back({d, db});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void check_budget(u64 n, const OracleBudget& budget) {
  if (n > budget.max_n)
    throw BudgetError("oracle: n = " + std::to_string(n) + " exceeds max_n = " + std::to_string(budget.max_n));
}

OracleValue evaluate(PointwiseKind kind, u64 n, unsigned b) {
  if (n == 0) throw DomainError("oracle: n must be >= 1");
  if (b == 0) throw DomainError("oracle: b must be >= 1");
  const auto divs = power_divisors(n, b);
  switch (kind) {
    case PointwiseKind::chi:
      return Rational(std::any_of(divs.begin(), divs.end(), [&](const PowerDivisor& pd) { return pd.db == n; }) ? 1
                                                                                                                 : 0);
    case PointwiseKind::xi: return Rational(divs.size() == 1 ? 1 : 0);
    default: break;
  }
  // count[i] = number of j <= n whose (j, n)_b is divs[i].d
  std::vector<u64> count(divs.size(), 0);
  for (u64 j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < divs.size(); ++i) {
      if (j % divs[i].db == 0) {
        ++count[i];
        break;
      }
    }
  }
  switch (kind) {
    case PointwiseKind::gen_gcd_sum: {
      i128 s = 0;
      for (std::size_t i = 0; i < divs.size(); ++i) s += static_cast<i128>(count[i]) * divs[i].d;
      return Rational(s);
    }
    case PointwiseKind::phi: return Rational(static_cast<i128>(count.back()));  // d = 1 is last
    case PointwiseKind::harmonic: {
      Rational inv_sum(0);
      for (std::size_t i = 0; i < divs.size(); ++i)
        if (count[i] != 0) inv_sum = inv_sum + Rational(static_cast<i128>(count[i]), static_cast<i128>(divs[i].d));
      return Rational(static_cast<i128>(n)) / inv_sum;
    }
    case PointwiseKind::geo: {
      CompensatedSum s;
      for (std::size_t i = 0; i < divs.size(); ++i)
        s += static_cast<double>(count[i]) * std::log(static_cast<double>(divs[i].d));
      return s.value();
    }
    default: break;
  }
  throw DomainError("oracle: unknown kind");
}

std::mutex cache_mu;
std::map<std::pair<int, unsigned>, std::vector<OracleValue>> cache;

u128 pow_u128(u128 v, unsigned r) {
  u128 out = 1;
  for (unsigned i = 0; i < r; ++i) out = checked_mul(out, v);
  return out;
}

u64 mod_pow(u64 base, unsigned e, u64 mod) {
  u128 result = 1 % mod;
  u128 x = base % mod;
  for (unsigned i = 0; i < e; ++i) result = result * x % mod;
  return static_cast<u64>(result);
}

struct LatticeScan {
  LatticeKind kind;
  unsigned k, b, r;
  u64 x;
  std::vector<std::vector<PowerDivisor>> divs;  // gcd kind only
  std::vector<u64> tuple;
  std::vector<std::vector<PowerDivisor>> candidates;
  std::vector<u128>* buckets = nullptr;

  u128 leaf() {
    u64 d = 1;
    if (kind == LatticeKind::gcd_power) {
      d = candidates[k - 1].front().d;
    } else {
      u64 l = 1;
      for (u64 n : tuple) l = std::lcm(l, n);
      for (d = 1; d <= l; ++d) {
        bool all = true;
        for (u64 n : tuple)
          if (mod_pow(d, b, n) != 0) {
            all = false;
            break;
          }
        if (all) break;
      }
    }
    return pow_u128(d, r);
  }

  void walk(unsigned depth, u64 current_max) {
    if (depth == k) {
      (*buckets)[current_max] = checked_add((*buckets)[current_max], leaf());
      return;
    }
    for (u64 n = 1; n <= x; ++n) {
      tuple[depth] = n;
      if (kind == LatticeKind::gcd_power) {
        auto& next = candidates[depth];
        next.clear();
        if (depth == 0) {
          next = divs[n];
        } else {
          for (const auto& pd : candidates[depth - 1])
            if (n % pd.db == 0) next.push_back(pd);
        }
      }
      walk(depth + 1, std::max(current_max, n));
    }
  }
};

}  // namespace

u64 brute_gen_gcd(u64 j, u64 n, unsigned b) {
  const u64 m = std::min(j, n);
  u64 best = 1;
  for (u64 d = 1;; ++d) {
    const u64 db = pow_capped(d, b, m);
    if (db > m) break;
    if (j % db == 0 && n % db == 0) best = d;
  }
  return best;
}

OracleValue brute_pointwise(PointwiseKind kind, u64 n, unsigned b, const OracleBudget& budget) {
  check_budget(n, budget);
  return evaluate(kind, n, b);
}

const std::vector<OracleValue>& brute_table(PointwiseKind kind, unsigned b, u64 N, const OracleBudget& budget) {
  check_budget(N, budget);
  std::lock_guard lock(cache_mu);
  auto& table = cache[{static_cast<int>(kind), b}];
  if (table.empty()) table.push_back(Rational(0));
  for (u64 n = table.size(); n <= N; ++n) table.push_back(evaluate(kind, n, b));
  return table;
}

std::vector<u128> brute_lattice_prefix(LatticeKind kind, unsigned k, unsigned b, u64 x, unsigned r,
                                       const OracleBudget& budget) {
  if (k < 1 || b < 1) throw DomainError("brute_lattice: k and b must be >= 1");
  if (std::pow(static_cast<double>(x), k) > static_cast<double>(budget.max_pairs))
    throw BudgetError("brute_lattice: x^k exceeds max_pairs");
  LatticeScan scan{kind, k, b, r, x, {}, std::vector<u64>(k, 0), std::vector<std::vector<PowerDivisor>>(k), nullptr};
  if (kind == LatticeKind::gcd_power) {
    scan.divs.resize(x + 1);
    for (u64 n = 1; n <= x; ++n) scan.divs[n] = power_divisors(n, b);
  }
  std::vector<u128> buckets(x + 1, 0);
  scan.buckets = &buckets;
  scan.walk(0, 0);
  for (u64 m = 1; m <= x; ++m) buckets[m] = checked_add(buckets[m], buckets[m - 1]);
  return buckets;
}

u128 brute_lattice(LatticeKind kind, unsigned k, unsigned b, u64 x, unsigned r, const OracleBudget& budget) {
  return brute_lattice_prefix(kind, k, b, x, r, budget)[x];
}

namespace {

std::vector<PrimePower> trial_factor(u64 n) {
  std::vector<PrimePower> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

OracleValue eval_f(const MultiplicativeFunctionSpec& f, u64 n) {
  const auto fac = trial_factor(n);
  if (f.has_exact()) return Rational(f.eval_exact(fac));
  return f.eval(fac);
}

OracleValue add(const OracleValue& a, const OracleValue& b) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
    return std::get<Rational>(a) + std::get<Rational>(b);
  auto as_double = [](const OracleValue& v) {
    return std::holds_alternative<Rational>(v) ? std::get<Rational>(v).to_double() : std::get<double>(v);
  };
  return as_double(a) + as_double(b);
}

}  // namespace

OracleValue cesaro_lhs(u64 j, const MultiplicativeFunctionSpec& f) {
  if (j == 0) throw DomainError("cesaro_lhs: j must be >= 1");
  OracleValue total = f.has_exact() ? OracleValue(Rational(0)) : OracleValue(0.0);
  for (u64 k = 1; k <= j; ++k) total = add(total, eval_f(f, std::gcd(k, j)));
  return total;
}

OracleValue cesaro_rhs(u64 j, const MultiplicativeFunctionSpec& f) {
  if (j == 0) throw DomainError("cesaro_rhs: j must be >= 1");
  OracleValue total = f.has_exact() ? OracleValue(Rational(0)) : OracleValue(0.0);
  for (u64 d = 1; d <= j; ++d) {
    if (j % d != 0) continue;
    const u64 m = j / d;
    i128 phi = 0;
    for (u64 i = 1; i <= m; ++i) phi += std::gcd(i, m) == 1 ? 1 : 0;
    const OracleValue fd = eval_f(f, d);
    if (std::holds_alternative<Rational>(fd))
      total = add(total, std::get<Rational>(fd) * Rational(phi));
    else
      total = add(total, std::get<double>(fd) * static_cast<double>(phi));
  }
  return total;
}

}  // namespace genmean::oracle
