#include "cyclothue/stickelberger.hpp"

#include <gmpxx.h>

#include <string>

#include "cyclothue/errors.hpp"
#include "cyclothue/modular.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

using nt::i64;
using nt::u64;

namespace {

// sum_c f(c) sigma_{c^{-1}}
template <class F>
GroupRingElement inverse_indexed(int n, F f) {
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n - 1), 0);
  for (i64 c = 1; c < n; ++c) {
    coeffs[static_cast<std::size_t>(nt::inv_mod(c, n) - 1)] += f(c);
  }
  return GroupRingElement(n, std::move(coeffs));
}

}  // namespace

GroupRingElement stickelberger_scaled(int n) {
  require_odd_prime(n);
  return inverse_indexed(n, [](i64 c) { return c; });
}

GroupRingElement fuchsian(int n, int k) {
  require_odd_prime(n);
  if (k < 2 || k > n) throw PreconditionError("fuchsian: need 2 <= k <= n");
  return inverse_indexed(n, [&](i64 c) { return (k * c) / n; });
}

GroupRingElement fueter(int n, int k) {
  require_odd_prime(n);
  if (k < 1 || k > n - 1) throw PreconditionError("fueter: need 1 <= k <= n-1");
  return inverse_indexed(n, [&](i64 c) { return ((k + 1) * c) / n - (k * c) / n; });
}

std::optional<std::vector<std::int64_t>> fueter_coordinates(const GroupRingElement& theta) {
  const int n = theta.modulus();
  const int half = (n - 1) / 2;
  const int cols = half + 1;
  const int rows = n - 1;

  // Augmented system [psi_1 .. psi_half N | theta] over Q.
  std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(rows),
                                        std::vector<mpq_class>(static_cast<std::size_t>(cols + 1)));
  for (int k = 1; k <= half; ++k) {
    const auto psi = fueter(n, k);
    for (int r = 0; r < rows; ++r) m[r][k - 1] = psi.coefficients()[r];
  }
  for (int r = 0; r < rows; ++r) {
    m[r][cols - 1] = 1;
    m[r][cols] = theta.coefficients()[r];
  }

  int pivot_row = 0;
  std::vector<int> pivot_col_of_row;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[pivot_row]);
    const mpq_class inv = 1 / m[pivot_row][col];
    for (int c = col; c <= cols; ++c) m[pivot_row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      const mpq_class f = m[r][col];
      for (int c = col; c <= cols; ++c) m[r][c] -= f * m[pivot_row][c];
    }
    pivot_col_of_row.push_back(col);
    ++pivot_row;
  }
  if (pivot_row != cols) {
    throw InvariantViolation("fueter_coordinates: Fueter basis is not of full rank");
  }
  for (int r = pivot_row; r < rows; ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  std::vector<std::int64_t> coords(static_cast<std::size_t>(cols));
  for (int r = 0; r < pivot_row; ++r) {
    const mpq_class& x = m[r][cols];
    if (x.get_den() != 1) return std::nullopt;
    coords[static_cast<std::size_t>(pivot_col_of_row[r])] = x.get_num().get_si();
  }
  return coords;
}

bool in_stickelberger_module(const GroupRingElement& theta) {
  if (!weights(theta).relative_weight) return false;
  return fueter_coordinates(theta).has_value();
}

bool is_fermat_module(const GroupRingElement& theta) {
  if (!in_stickelberger_module(theta)) {
    throw PreconditionError("is_fermat_module: element is not in the Stickelberger module");
  }
  return fermat_map(theta) == 0;
}

std::vector<GroupRingElement> positive_fermat_elements(int n, std::int64_t relative_weight) {
  require_odd_prime(n);
  if (relative_weight < 0) throw PreconditionError("relative weight must be non-negative");
  const int half = (n - 1) / 2;
  std::vector<GroupRingElement> out;
  // Positivity and theta + j theta = s N pin each pair (n_c, n_{n-c}) to
  // (x, s - x) with 0 <= x <= s.
  std::vector<std::int64_t> x(static_cast<std::size_t>(half), 0);
  while (true) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n - 1));
    for (int c = 1; c <= half; ++c) {
      coeffs[static_cast<std::size_t>(c - 1)] = x[static_cast<std::size_t>(c - 1)];
      coeffs[static_cast<std::size_t>(n - c - 1)] = relative_weight - x[static_cast<std::size_t>(c - 1)];
    }
    GroupRingElement theta(n, std::move(coeffs));
    if (fermat_map(theta) == 0 && fueter_coordinates(theta)) out.push_back(std::move(theta));

    int pos = half - 1;
    while (pos >= 0 && x[static_cast<std::size_t>(pos)] == relative_weight) {
      x[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++x[static_cast<std::size_t>(pos)];
  }
  return out;
}

VoronoiCheck voronoi_check(int n, std::int64_t a, int m) {
  require_odd_prime(n);
  if (nt::mod(a, n) == 0) throw PreconditionError("voronoi_check: a must be coprime to n");
  if (m < 2 || m > n - 1 || m % 2 != 0) {
    throw PreconditionError("voronoi_check: need even m with 2 <= m <= n-1");
  }
  VoronoiCheck out;
  if ((m % (n - 1)) == 0) {
    out.status = VoronoiCheck::Status::skipped;
    return out;
  }
  const i64 ar = nt::mod(a, n);
  const i64 am = nt::pow_mod(ar, static_cast<u64>(m), n);
  out.lhs = nt::mul_mod(am, voronoi_sum(n, ar, m), n);
  const i64 bm = bernoulli_mod_p(m, n);
  out.rhs = nt::mul_mod(nt::mul_mod(nt::mod(am * ar - ar, n), bm, n), nt::inv_mod(m, n), n);
  out.status = out.lhs == out.rhs ? VoronoiCheck::Status::holds : VoronoiCheck::Status::fails;
  return out;
}

VoronoiCheck voronoi_fermat_check(int n, std::int64_t a) {
  require_odd_prime(n);
  if (nt::mod(a, n) == 0) throw PreconditionError("voronoi_fermat_check: a must be coprime to n");
  const i64 ar = nt::mod(a, n);
  const i64 n2 = static_cast<i64>(n) * n;
  VoronoiCheck out;
  out.lhs = voronoi_sum(n, ar, n - 1);
  // (a^n - a)/n mod n, through a^n mod n^2.
  out.rhs = nt::mod(nt::mod(nt::pow_mod(ar, static_cast<u64>(n), n2) - ar, n2) / n, n);
  out.status = out.lhs == out.rhs ? VoronoiCheck::Status::holds : VoronoiCheck::Status::fails;
  return out;
}

std::optional<SimpleTheta> lemma_simple_search(int n) {
  require_odd_prime(n);
  if (n < 5) throw PreconditionError("lemma_simple_search: need n >= 5");
  const int top = n - 2;  // psi_{n-1} is the norm; excluded to keep relative weight 2
  std::vector<i64> first(static_cast<std::size_t>(top + 1));
  std::vector<i64> minus(static_cast<std::size_t>(top + 1));
  std::vector<GroupRingElement> psi;
  psi.reserve(static_cast<std::size_t>(top + 1));
  psi.push_back(GroupRingElement(n));
  for (int t = 1; t <= top; ++t) {
    psi.push_back(fueter(n, t));
    first[static_cast<std::size_t>(t)] = moment(psi.back(), 1).value;
    minus[static_cast<std::size_t>(t)] = moment(psi.back(), -1).value;
  }

  auto build = [&](int u, int v, int w, int z, SimpleTheta::Path path) {
    SimpleTheta s{psi[static_cast<std::size_t>(u)].act(w) + psi[static_cast<std::size_t>(v)].act(z),
                  u, v, w, z, path};
    const auto wt = weights(s.theta);
    if (moment(s.theta, 1).value != 0 || moment(s.theta, -1).value == 0 || !s.theta.is_positive() ||
        wt.relative_weight != std::optional<std::int64_t>{2}) {
      throw InvariantViolation("lemma_simple_search: candidate failed re-verification");
    }
    return s;
  };

  if (n != 7) {
    for (int u = 1; u <= top; ++u) {
      const i64 au = first[static_cast<std::size_t>(u)];
      if (au == 0) continue;
      const i64 pu = nt::mul_mod(au, minus[static_cast<std::size_t>(u)], n);
      for (int v = 1; v <= top; ++v) {
        const i64 av = first[static_cast<std::size_t>(v)];
        if (av == 0) continue;
        const i64 pv = nt::mul_mod(av, minus[static_cast<std::size_t>(v)], n);
        if (pu == pv) continue;
        // w = 1 and z = -a_u / a_v solve the first equation; P(u) != P(v)
        // makes the second one non-zero.
        const i64 z = nt::mod(-nt::mul_mod(au, nt::inv_mod(av, n), n), n);
        return build(u, v, 1, static_cast<int>(z), SimpleTheta::Path::closed_form);
      }
    }
  }

  for (int u = 1; u <= top; ++u) {
    for (int v = 1; v <= top; ++v) {
      for (int w = 1; w < n; ++w) {
        for (int z = 1; z < n; ++z) {
          const i64 f = nt::mod(nt::mul_mod(w, first[static_cast<std::size_t>(u)], n) +
                                    nt::mul_mod(z, first[static_cast<std::size_t>(v)], n),
                                n);
          if (f != 0) continue;
          const i64 g = nt::mod(nt::mul_mod(minus[static_cast<std::size_t>(u)], nt::inv_mod(w, n), n) +
                                    nt::mul_mod(minus[static_cast<std::size_t>(v)], nt::inv_mod(z, n), n),
                                n);
          if (g == 0) continue;
          return build(u, v, w, z, SimpleTheta::Path::exhaustive);
        }
      }
    }
  }
  return std::nullopt;
}

ProofTheta theta_for_proof(const GroupRingElement& mu, const GroupRingElement& theta0) {
  if (mu.modulus() != theta0.modulus()) throw PreconditionError("theta_for_proof: modulus mismatch");
  if (!mu.is_positive() || !theta0.is_positive()) {
    throw PreconditionError("theta_for_proof: mu and theta0 must be positive");
  }
  if (moment(mu, 1).value != 0 || moment(theta0, 1).value != 0) {
    throw PreconditionError("theta_for_proof: phi^(1) must vanish on mu and theta0");
  }
  if (moment(mu, -1).value == 0 || moment(theta0, -1).value == 0) {
    throw PreconditionError("theta_for_proof: phi^(-1) must be non-zero on mu and theta0");
  }
  ProofTheta out{2 * (mu * theta0), 2 * weights(mu).absolute_weight};
  if (moment(out.theta, 1).value != 0 || moment(out.theta, -1).value == 0) {
    throw InvariantViolation("theta_for_proof: moments not multiplicative");
  }
  return out;
}

}  // namespace cyclothue
