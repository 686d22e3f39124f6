#pragma once

// Word-size modular arithmetic shared by every module. Moduli are assumed
// to fit in 63 bits; products go through 128-bit intermediates.

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclothue::nt {

using i64 = std::int64_t;
using u64 = std::uint64_t;
__extension__ using i128 = __int128;

// Representative of a in [0, m).
constexpr i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

constexpr i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<i128>(mod(a, m)) * mod(b, m) % m);
}

i64 pow_mod(i64 base, u64 exp, i64 m);

// Inverse of a modulo m by extended gcd. Throws PreconditionError when
// gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);

// Balanced representative in (-m/2, m/2].
i64 centered(i64 a, i64 m);

i64 gcd(i64 a, i64 b);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// Primes p with lo <= p <= hi (simple sieve).
std::vector<i64> primes_in(i64 lo, i64 hi);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
i64 multiplicative_order(i64 a, i64 m);

// Prime factorisation of a positive 64-bit integer by trial division.
std::vector<std::pair<i64, int>> factor_small(i64 n);

// Largest r with r^k <= x, for x >= 0.
u64 integer_root(u64 x, unsigned k);

}  // namespace cyclothue::nt
