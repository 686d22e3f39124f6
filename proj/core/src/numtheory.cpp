#include "cyclothue/numtheory.hpp"

#include <cmath>

#include "cyclothue/errors.hpp"

namespace cyclothue::nt {

i64 pow_mod(i64 base, u64 exp, i64 m) {
  if (m == 1) return 0;
  i64 result = 1;
  i64 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    exp >>= 1U;
  }
  return result;
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 inv_mod(i64 a, i64 m) {
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw PreconditionError("inv_mod: argument not invertible");
  return mod(old_s, m);
}

i64 centered(i64 a, i64 m) {
  i64 r = mod(a, m);
  return r > m / 2 ? r - m : r;
}

namespace {

bool miller_rabin_round(u64 n, u64 a, u64 d, int s) {
  const auto m = static_cast<i64>(n);
  i64 x = pow_mod(static_cast<i64>(a % n), d, m);
  if (x == 1 || x == m - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, m);
    if (x == m - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

std::vector<i64> primes_in(i64 lo, i64 hi) {
  std::vector<i64> out;
  if (hi < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (i64 i = 2; i * i <= hi; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    for (i64 j = i * i; j <= hi; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  for (i64 i = lo < 2 ? 2 : lo; i <= hi; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

i64 multiplicative_order(i64 a, i64 m) {
  if (gcd(a, m) != 1) throw PreconditionError("multiplicative_order: gcd(a, m) != 1");
  if (m == 1) return 1;
  // Order divides the group exponent; walk the divisors of phi(m).
  i64 phi = m;
  for (auto [p, e] : factor_small(m)) phi = phi / p * (p - 1);
  i64 order = phi;
  for (auto [q, e] : factor_small(phi)) {
    for (int i = 0; i < e; ++i) {
      if (pow_mod(a, static_cast<u64>(order / q), m) == 1) {
        order /= q;
      } else {
        break;
      }
    }
  }
  return order;
}

std::vector<std::pair<i64, int>> factor_small(i64 n) {
  if (n <= 0) throw PreconditionError("factor_small: argument must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

u64 integer_root(u64 x, unsigned k) {
  if (k == 0) throw PreconditionError("integer_root: k must be positive");
  if (k == 1 || x < 2) return x;
  auto r = static_cast<u64>(std::pow(static_cast<double>(x), 1.0 / k));
  auto fits = [&](u64 c) {
    i128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      acc *= c;
      if (acc > static_cast<i128>(x)) return false;
    }
    return true;
  };
  while (r > 0 && !fits(r)) --r;
  while (fits(r + 1)) ++r;
  return r;
}

}  // namespace cyclothue::nt
