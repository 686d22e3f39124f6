#pragma once

// The binary Thue equation X^n - 1 = B Z^n: the nosplit condition, the
// exponent set N(B), reduction to the diagonal Nagell-Ljunggren form,
// size bounds, necessary criteria, exponent classification and the scanner.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cyclothue/factor.hpp"

namespace cyclothue {

// Euler totient of rad(B). B > 1.
std::int64_t phi_star(std::int64_t B);
// gcd(n, phi*(B)) = 1.
bool nosplit_holds(std::int64_t B, std::int64_t n);
// Every prime factor of n divides phi*(B).
bool in_exponent_set(std::int64_t B, std::int64_t n);

// X^n - 1 == B Z^n, exactly.
bool is_solution(std::int64_t B, std::int64_t n, std::int64_t X, const mpz_class& Z);

struct NLCofactors {
  std::int64_t u = 0;  // X mod n, in [0, n)
  int e = 0;           // 1 iff X = 1 mod n
  mpz_class D;         // X - 1
  mpz_class F;         // (X^n - 1) / (n^e (X - 1))
  std::int64_t delta = 0;  // gcd((X^n - 1)/(X - 1), X - 1)
  std::int64_t c_X = 0;    // 1/(X - 1) mod n when e = 0, else 0
};

// The quantities that depend on X and n only. X != 1, n an odd prime.
NLCofactors nl_cofactors(std::int64_t X, int n);

struct ReductionRecord {
  std::int64_t X = 0;
  int n = 0;
  std::int64_t B = 0;
  NLCofactors cof;
  mpz_class Z;
  mpz_class Y;  // F = Y^n
  mpz_class C;  // Z = C Y, X - 1 = B C^n / n^e
  std::vector<PrimePower> F_factors;
};

// Requires that (X, Z) solve X^n - 1 = B Z^n for some Z, that n is an odd
// prime and that nosplit holds. Throws PreconditionError if F has a prime
// factor q != 1 mod n or is not an n-th power, ResourceBoundError if F
// cannot be factored within the work bound.
ReductionRecord reduce(std::int64_t X, int n, std::int64_t B, std::uint64_t work_bound);
ReductionRecord reduce(std::int64_t X, int n, std::int64_t B);

enum class BoundsKind { generic, u_zero, u_plus_minus_one };

struct BoundsCase {
  int n = 0;
  BoundsKind kind = BoundsKind::generic;
  mpz_class E;               // |X| < E
  std::int64_t C_bound = 0;  // |C| < 2n - 1
};

// n >= 17 prime, u a residue mod n.
BoundsCase bounds(int n, std::int64_t u);
std::string to_string(BoundsKind kind);

struct WieferichEntry {
  std::int64_t r = 0;
  bool holds = false;  // r^{n-1} = 1 mod n^2
};

// r^{n-1} = 1 mod n^2 for every prime r | X(X^2 - 1) and for r = 2, 3,
// skipping r = n.
std::vector<WieferichEntry> wieferich_battery(std::int64_t X, int n);

struct CriteriaReport {
  bool part_a = false;  // n > 163 * 10^6
  bool part_b = false;  // X - 1 = +-B/n^e and B < n^n
  bool part_c = false;  // whole Wieferich battery holds
  std::vector<WieferichEntry> battery;
  bool known_exception = false;  // (X, Z; B, n) = (18, 7; 17, 3)
  // True when some part fails: such a tuple is not a solution other than
  // the known exception.
  bool excluded() const { return !(part_a && part_b && part_c); }
};

CriteriaReport criteria_report(std::int64_t X, const mpz_class& Z, std::int64_t B, int n);

enum class ExponentClass {
  in_exponent_set,
  reduces_to_prime,
  excluded_two_coprime_primes,
  excluded_mixed,
  excluded_prime_power,
};

struct Classification {
  ExponentClass kind = ExponentClass::in_exponent_set;
  std::int64_t p = 0;  // for reduces_to_prime: n = p m
  std::int64_t m = 0;  // largest divisor of n lying in N(B) (1 if none)
};

Classification classify_exponent(std::int64_t B, std::int64_t n);
std::string to_string(ExponentClass kind);

enum class MonotoneVariant { two_prime, mixed };

// f(t) = p(X^{p+t} - 1) - (p+t)(X^p - 1) (two_prime) or
// f(t) = p(X^{p+t} - 1) - (X^p - 1) (mixed), t = 0..t_max. For X >= 2 f must
// be strictly increasing; for X <= -2 strictly monotone on each parity class
// of t. two_prime additionally needs f(0) = 0, mixed needs f(0) != 0, and in
// both cases f(t) != 0 for 1 <= t <= t_max.
bool monotone_f_check(std::int64_t p, std::int64_t X, int t_max, MonotoneVariant variant);

struct PrimePowerEvidence {
  std::int64_t B = 0;
  std::int64_t p = 0;
  int c = 0;
  // c > 2: a solution forces 2^{p^{c-1}} - 1 <= B and B < p^p.
  // c = 2: a solution forces Y >= ell > 2 p^2 with ell the least prime
  //        = 1 mod p^2, while Y < p + 1.
  mpz_class lower;  // lower bound forced on B (c > 2) or on Y (c = 2)
  mpz_class upper;  // exclusive upper bound on the same quantity
  std::int64_t ell = 0;
  bool excluded = false;  // lower >= upper
};

// Requires c >= 2 and gcd(p, phi*(B)) = 1.
PrimePowerEvidence prime_power_check(std::int64_t B, std::int64_t p, int c);

struct SolutionRecord {
  std::int64_t B = 0;
  std::int64_t n = 0;
  std::int64_t X = 0;
  std::int64_t Z = 0;
  bool trivial = false;  // Z in {-1, 0, 1}

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

struct ScanParams {
  std::int64_t b_min = 2;
  std::int64_t b_max = 2;
  std::vector<std::int64_t> n_values;
  std::int64_t x_max = 2;  // 2 <= |X| <= x_max
  bool require_nosplit = false;
  unsigned threads = 1;
};

// All (B, n, X) with (X^n - 1)/B an exact n-th power, ordered by B, n, X
// ascending. The result does not depend on the thread count.
std::vector<SolutionRecord> scan(const ScanParams& params);

}  // namespace cyclothue
