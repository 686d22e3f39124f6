#pragma once

// Rational-integer modular toolkit: Fermat quotients, Bernoulli numbers
// modulo p via the Voronoi congruence, irregularity reports, the small
// pigeonhole combinations and the decomposition-group element mu.

#include <cstdint>
#include <span>
#include <vector>

#include "cyclothue/groupring.hpp"

namespace cyclothue {

// (a^{p-1} - 1)/p mod p. Zero iff (a, p) is a Wieferich-type pair.
std::int64_t fermat_quotient_int(std::int64_t a, std::int64_t p);

// sum_{j=1}^{p-1} floor(a j / p) j^{m-1} mod p: the sum on the left of the
// Voronoi congruence, without the a^m factor.
std::int64_t voronoi_sum(std::int64_t p, std::int64_t a, int m);

// B_m mod p for even m, 2 <= m <= p-3, solved from the Voronoi congruence
// with the least base a >= 2 satisfying a^{m+1} != a mod p.
std::int64_t bernoulli_mod_p(int m, std::int64_t p);

// Same, but solved with an explicit base a. Throws PreconditionError when
// a^{m+1} = a mod p (the congruence carries no information for that a).
std::int64_t bernoulli_mod_p_with_base(int m, std::int64_t p, std::int64_t a);

// The least admissible base for (m, p), and the next one after it. The
// second is what cf_report uses to confirm irregular indices.
std::int64_t voronoi_base(int m, std::int64_t p, std::int64_t start = 2);

// B_m mod p for every even m in [2, p-3]; entry m of the result (other
// entries are -1). O(p^2) total work.
std::vector<std::int64_t> bernoulli_table_mod_p(std::int64_t p);

struct CFReport {
  std::int64_t p = 0;
  std::vector<int> irregular_indices;  // even k in [2, p-3] with B_k = 0 mod p
  int index_of_irregularity = 0;
  bool eichler_ok = false;         // i_r(p) < sqrt(p) - 1
  bool vandiver_checked = false;   // never computed here
  bool confirmed_by_second_base = true;
};

CFReport cf_report(std::int64_t p);

struct PigeonholeSolution {
  std::vector<std::int64_t> b;
  std::int64_t bound = 0;  // A = 2 ceil(p^{1/k})
};

// Combination sum a_i b_i = 0 mod p with small |b_i| <= A, found by
// enumerating T^k (T = {1..A}) with the first coordinate varying fastest;
// the first collision (b = later - earlier) wins. For k = 2, collisions with
// sum b_i / a_i = 0 mod p are skipped.
PigeonholeSolution pigeonhole_solve(std::int64_t p, std::span<const std::int64_t> a);

// Multiplicative order of r modulo the prime n, i.e. |d(r)|.
std::int64_t decomposition_order(std::int64_t r, std::int64_t n);

// Positive mu supported on d(p) with phi^(1)(mu) = 0, phi^(-1)(mu) != 0.
// For p in {2, 3, 5} the closed form 1 + p * j * sigma_p^{-1} is used.
GroupRingElement build_mu(int n, std::int64_t p);

}  // namespace cyclothue
