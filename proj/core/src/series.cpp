#include "cyclothue/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cyclothue/errors.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

using nt::i64;

namespace {

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

mpz_class mpz_pow(i64 base, int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

// binom(r, j) for rational r.
mpq_class binom(const mpq_class& r, int j) {
  mpq_class acc = 1;
  for (int i = 0; i < j; ++i) {
    acc *= (r - i);
    acc /= (i + 1);
  }
  return acc;
}

void require_order(int n, int order) {
  if (order < 0 || order >= n) throw PreconditionError("series order must satisfy 0 <= N < n");
}

// Truncated product of two series in one variable.
template <typename T>
std::vector<T> truncated_product(const std::vector<T>& x, const std::vector<T>& y, int order, const T& zero) {
  std::vector<T> out(static_cast<std::size_t>(order + 1), zero);
  for (int i = 0; i <= order; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] =
          out[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

void check_theta(const GroupRingElement& theta) {
  require_odd_prime(theta.modulus());
}

}  // namespace

std::vector<CycInt> series_b(const GroupRingElement& theta, int order) {
  check_theta(theta);
  const int n = theta.modulus();
  require_order(n, order);
  // With T = D / (n (1 - zeta)), the factor for c is (1 + n v_c T)^{n_c/n},
  // v_c = (1 - zeta)/(1 - zeta^c); its T^j coefficient is
  // prod_{i<j} (n_c - i n) / j! * v_c^j, an integer multiple of v_c^j.
  const CycInt zero(n);
  std::vector<CycInt> acc(static_cast<std::size_t>(order + 1), zero);
  acc[0] = CycInt::from_integer(n, 1);
  for (i64 c = 1; c < n; ++c) {
    const i64 nc = theta.coeff(c);
    if (nc == 0) continue;
    const CycInt v = rho(GroupRingElement::sigma(n, c));
    std::vector<CycInt> factor(static_cast<std::size_t>(order + 1), zero);
    CycInt vpow = CycInt::from_integer(n, 1);
    mpz_class g = 1;
    for (int j = 0; j <= order; ++j) {
      factor[static_cast<std::size_t>(j)] = g * vpow;
      if (j == order) break;
      vpow *= v;
      g *= mpz_class(nc) - mpz_class(j) * n;
      if (!mpz_divisible_ui_p(g.get_mpz_t(), static_cast<unsigned long>(j + 1))) {
        throw InvariantViolation("series_b: non-integral binomial factor");
      }
      g /= (j + 1);
    }
    acc = truncated_product(acc, factor, order, zero);
  }
  for (int k = 0; k <= order; ++k) {
    acc[static_cast<std::size_t>(k)] = factorial(k) * acc[static_cast<std::size_t>(k)];
  }
  return acc;
}

SeriesExpansion series_expand(const GroupRingElement& theta, int order) {
  check_theta(theta);
  const int n = theta.modulus();
  if (order <= 0 || order >= n) throw PreconditionError("series_expand: order must satisfy 0 < N < n");

  const CycRat zero(n);
  const CycRat inv_lambda = inverse_lambda(n);
  std::vector<CycRat> a(static_cast<std::size_t>(order + 1), zero);
  a[0] = CycRat(CycInt::from_integer(n, 1));
  for (i64 c = 1; c < n; ++c) {
    const i64 nc = theta.coeff(c);
    if (nc == 0) continue;
    const CycRat u = inv_lambda.galois(c);
    mpq_class r{mpz_class(nc), mpz_class(n)};
    r.canonicalize();
    std::vector<CycRat> factor(static_cast<std::size_t>(order + 1), zero);
    CycRat upow(CycInt::from_integer(n, 1));
    for (int j = 0; j <= order; ++j) {
      factor[static_cast<std::size_t>(j)] = binom(r, j) * upow;
      upow = upow * u;
    }
    a = truncated_product(a, factor, order, zero);
  }

  SeriesExpansion out{theta, order, a, {}};
  const CycInt lambda = CycInt::lambda(n);
  const CycInt r = rho(theta);
  CycInt lambda_pow = CycInt::from_integer(n, 1);
  CycInt r_pow = CycInt::from_integer(n, 1);
  for (int k = 0; k <= order; ++k) {
    const mpz_class kf = factorial(k);
    const CycRat bk = mpq_class(kf * mpz_pow(n, k)) * (CycRat(lambda_pow) * a[static_cast<std::size_t>(k)]);
    if (!bk.is_integral() || !bk.numerator().divisible_by(kf)) {
      throw InvariantViolation("series_expand: b_k / k! is not integral for k = " + std::to_string(k));
    }
    if (!(bk.numerator() - r_pow).divisible_by(n)) {
      throw InvariantViolation("series_expand: b_k - rho^k is not divisible by n for k = " + std::to_string(k));
    }
    out.b.push_back(bk.numerator());
    lambda_pow *= lambda;
    r_pow *= r;
  }
  return out;
}

CycInt cyc_determinant(std::vector<std::vector<CycInt>> m) {
  const std::size_t N = m.size();
  if (N == 0) throw PreconditionError("cyc_determinant: empty matrix");
  const int n = m[0][0].conductor();
  for (const auto& row : m) {
    if (row.size() != N) throw PreconditionError("cyc_determinant: matrix must be square");
  }
  bool negate = false;
  CycInt prev_conj = CycInt::from_integer(n, 1);
  mpz_class prev_norm = 1;
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < N && m[r][k].is_zero()) ++r;
      if (r == N) return CycInt(n);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j) {
        const CycInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = k == 0 ? t : (t * prev_conj).divided_by(prev_norm);
      }
      m[i][k] = CycInt(n);
    }
    prev_conj = conjugate_product(m[k][k]);
    const CycInt nv = m[k][k] * prev_conj;
    if (!nv.is_rational()) throw InvariantViolation("cyc_determinant: norm not rational");
    prev_norm = nv.constant_term();
  }
  const CycInt& det = m[N - 1][N - 1];
  return negate ? -det : det;
}

RegularityResult regularity_check(const GroupRingElement& theta, const std::vector<i64>& J) {
  check_theta(theta);
  const int n = theta.modulus();
  const i64 phi_minus = moment(theta, -1).value;
  if (phi_minus == 0) throw PreconditionError("regularity_check: phi^(-1)(theta) must be nonzero");
  const int N = static_cast<int>(J.size());
  if (N < 1 || N >= n) throw PreconditionError("regularity_check: need 1 <= |J| < n");
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (nt::mod(J[i], n) == 0) throw PreconditionError("regularity_check: J entries must be units mod n");
    for (std::size_t j = i + 1; j < J.size(); ++j) {
      if (nt::mod(J[i] - J[j], n) == 0 || nt::mod(J[i] + J[j], n) == 0) {
        throw PreconditionError("regularity_check: J must not contain c and +-c");
      }
    }
  }
  std::vector<std::vector<CycInt>> m(static_cast<std::size_t>(N));
  for (const i64 c : J) {
    const auto b = series_b(theta.act(c), N - 1);
    for (int k = 0; k < N; ++k) m[static_cast<std::size_t>(k)].push_back(b[static_cast<std::size_t>(k)]);
  }
  RegularityResult out;
  out.det_mod_lambda = cyc_determinant(std::move(m)).mod_lambda();
  i64 closed = 1;
  for (std::size_t i = 0; i < J.size(); ++i) {
    for (std::size_t j = i + 1; j < J.size(); ++j) {
      const i64 xi = nt::mul_mod(phi_minus, nt::inv_mod(J[i], n), n);
      const i64 xj = nt::mul_mod(phi_minus, nt::inv_mod(J[j], n), n);
      closed = nt::mul_mod(closed, xj - xi, n);
    }
  }
  out.closed_form = closed;
  out.matches = out.det_mod_lambda == closed;
  out.regular = out.det_mod_lambda != 0;
  return out;
}

double dominance_constant(int n) { return 1.0 / std::sin(std::numbers::pi / n); }

double dominance_bound(int n, i64 w, int k) {
  const double K = dominance_constant(n);
  const double r = static_cast<double>(w) / n;
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= (r + i) * n * 2.0 * K;
  return acc;
}

double log_determinant_bound(int n, int N) {
  return 1.5 * N * N * std::log(static_cast<double>(n)) + 0.5 * N * std::log(static_cast<double>(N));
}

double hadamard_bound(const std::vector<std::vector<CycInt>>& m, i64 c) {
  if (m.empty()) return 1.0;
  double prod = 1.0;
  for (std::size_t j = 0; j < m[0].size(); ++j) {
    double sq = 0.0;
    for (const auto& row : m) sq += std::norm(row[j].embed(c));
    prod *= std::sqrt(sq);
  }
  return prod;
}

CancellationSystem cancellation_solve(const GroupRingElement& Theta, const std::vector<i64>& J) {
  const int n = Theta.modulus();
  const int N = static_cast<int>(J.size());
  if (N < 2) throw PreconditionError("cancellation_solve: need |J| >= 2");
  const auto reg = regularity_check(Theta, J);
  if (!reg.regular) throw PreconditionError("cancellation_solve: system is not regular");

  std::vector<std::vector<CycInt>> matrix(static_cast<std::size_t>(N));
  for (const i64 c : J) {
    const auto b = series_b(Theta.act(c), N - 1);
    for (int k = 0; k < N; ++k) matrix[static_cast<std::size_t>(k)].push_back(b[static_cast<std::size_t>(k)]);
  }
  const int h = (N + 1) / 2;
  std::vector<CycInt> d(static_cast<std::size_t>(N), CycInt(n));
  d[static_cast<std::size_t>(h)] = (factorial(h) * mpz_pow(n, h)) * CycInt::lambda(n).pow(static_cast<unsigned>(h));

  CycInt A = cyc_determinant(matrix);
  if (A.is_zero()) throw InvariantViolation("cancellation_solve: singular matrix");
  const CycRat A_inv = CycRat(A).inverse();
  std::vector<CycInt> A_sigma;
  std::vector<CycRat> lambda;
  std::vector<std::vector<std::vector<CycInt>>> replaced;
  for (int j = 0; j < N; ++j) {
    auto mj = matrix;
    for (int k = 0; k < N; ++k) mj[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(k)];
    A_sigma.push_back(cyc_determinant(mj));
    lambda.push_back(CycRat(A_sigma.back()) * A_inv);
    replaced.push_back(std::move(mj));
  }

  bool residual_ok = true;
  for (int k = 0; k < N; ++k) {
    CycRat sum(n);
    for (int j = 0; j < N; ++j) {
      sum = sum + lambda[static_cast<std::size_t>(j)] * CycRat(matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    }
    if (!(sum == CycRat(d[static_cast<std::size_t>(k)]))) residual_ok = false;
  }

  const double log_n = std::log(static_cast<double>(n));
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 1; k < N; ++k) {
    for (const auto& entry : matrix[static_cast<std::size_t>(k)]) {
      for (i64 c = 1; c < n; ++c) {
        worst = std::max(worst, std::log(std::abs(entry.embed(c))) - 3.0 * k * log_n);
      }
    }
  }
  const bool entry_bound_ok = worst < 0.0;

  constexpr double tol = 1e-9;
  bool hadamard_ok = true;
  bool det_bound_ok = true;
  const double log_bound = log_determinant_bound(n, N);
  auto check_det = [&](const CycInt& det, const std::vector<std::vector<CycInt>>& m) {
    for (i64 c = 1; c < n; ++c) {
      const double v = std::abs(det.embed(c));
      if (v > hadamard_bound(m, c) * (1.0 + tol) + tol) hadamard_ok = false;
      if (v > 0.0 && std::log(v) > log_bound) det_bound_ok = false;
    }
  };
  check_det(A, matrix);
  for (int j = 0; j < N; ++j) check_det(A_sigma[static_cast<std::size_t>(j)], replaced[static_cast<std::size_t>(j)]);

  return CancellationSystem{J,           N,           std::move(matrix), std::move(d), std::move(A),
                            std::move(A_sigma), std::move(lambda), residual_ok, entry_bound_ok,
                            hadamard_ok, det_bound_ok, N > 1 ? worst : 0.0};
}

}  // namespace cyclothue
