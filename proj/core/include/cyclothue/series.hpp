#pragma once

// Binomial series f[theta] = prod_c (1 + D/(1 - zeta^c))^{n_c/n} in the
// formal variable D, the integral coefficients b_k[theta], the Vandermonde
// regularity of the matrix (b_k[sigma_c theta]) and the linear system used
// to cancel the low-order terms.

#include <cstdint>
#include <vector>

#include "cyclothue/cyclotomic.hpp"
#include "cyclothue/groupring.hpp"

namespace cyclothue {

struct SeriesExpansion {
  GroupRingElement theta;
  int order = 0;
  // Raw coefficient of D^k, k = 0..order.
  std::vector<CycRat> a;
  // b_k = k! n^k (1 - zeta)^k a[k].
  std::vector<CycInt> b;
};

// Throws PreconditionError unless 0 < order < n, and InvariantViolation if
// any b_k / k! fails to be integral or b_k - rho(theta)^k is not divisible
// by n.
SeriesExpansion series_expand(const GroupRingElement& theta, int order);

// Only the integral coefficients b_0..b_order, computed directly in Z[zeta].
std::vector<CycInt> series_b(const GroupRingElement& theta, int order);

struct RegularityResult {
  std::int64_t det_mod_lambda = 0;  // det (b_k[sigma_c theta]) mod (1 - zeta)
  std::int64_t closed_form = 0;     // prod_{i<j} (x_j - x_i), x_c = phi^(-1)(theta)/c
  bool matches = false;
  bool regular = false;
};

// J lists the indices c of sigma_c in column order; rows are k = 0..N-1.
RegularityResult regularity_check(const GroupRingElement& theta, const std::vector<std::int64_t>& J);

// Exact determinant over Z[zeta] by fraction-free elimination.
CycInt cyc_determinant(std::vector<std::vector<CycInt>> m);

struct CancellationSystem {
  std::vector<std::int64_t> J;
  int N = 0;
  std::vector<std::vector<CycInt>> matrix;  // matrix[k][j] = b_k[sigma_{J[j]} Theta]
  std::vector<CycInt> d;                    // right-hand side
  CycInt A;
  std::vector<CycInt> A_sigma;
  std::vector<CycRat> lambda;  // A_sigma / A
  bool residual_ok = false;
  bool entry_bound_ok = false;     // |b_k| < n^{3k}, k >= 1, every embedding
  bool hadamard_ok = false;        // |A|, |A_sigma| below the column-norm product
  bool determinant_bound_ok = false;  // |A|, |A_sigma| <= n^{3N^2/2} N^{N/2}
  double max_log_entry_ratio = 0;  // max over k >= 1 of log|b_k| - 3k log n
};

// Solves sum_sigma lambda_sigma b_k[sigma Theta] = d_k (k = 0..N-1), with d
// zero except d_h = (1 - zeta)^h n^h h!, h = ceil(N/2), by Cramer's rule.
CancellationSystem cancellation_solve(const GroupRingElement& Theta, const std::vector<std::int64_t>& J);

// K = max_c |1/(1 - zeta^c)| = 1/sin(pi/n).
double dominance_constant(int n);

// k! n^k (2K)^k binom(w/n + k - 1, k): the dominating-series bound for
// |b_k[theta]| when w(theta) = w.
double dominance_bound(int n, std::int64_t w, int k);

// log of n^{3N^2/2} N^{N/2}.
double log_determinant_bound(int n, int N);

// Hadamard bound prod_j ||column_j|| of the embedding zeta -> exp(2 pi i c/n).
double hadamard_bound(const std::vector<std::vector<CycInt>>& m, std::int64_t c);

}  // namespace cyclothue
