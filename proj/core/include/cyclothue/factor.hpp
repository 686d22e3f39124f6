#pragma once

// Integer factorization for the reduction step: trial division up to 10^6,
// then Pollard rho (Brent's variant, deterministic seeds) under a work bound.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclothue {

struct PrimePower {
  mpz_class prime;
  unsigned exponent = 0;
};

// CYCLOTHUE_WORK_BOUND if set to a positive integer, otherwise 10^8.
std::uint64_t default_work_bound();

// Prime factorization of |x| (x != 0) in increasing order of primes. Throws
// ResourceBoundError once more than work_bound rho iterations are spent.
std::vector<PrimePower> factorize(const mpz_class& x, std::uint64_t work_bound);

}  // namespace cyclothue
