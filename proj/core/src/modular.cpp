#include "cyclothue/modular.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "cyclothue/errors.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

using nt::i64;
using nt::u64;

std::int64_t fermat_quotient_int(std::int64_t a, std::int64_t p) {
  if (p < 2 || !nt::is_prime(static_cast<u64>(p))) {
    throw PreconditionError("fermat_quotient_int: p must be prime");
  }
  if (nt::mod(a, p) == 0) throw PreconditionError("fermat_quotient_int: p divides a");
  if (p > 3'000'000'000LL) throw PreconditionError("fermat_quotient_int: p too large");
  const i64 p2 = p * p;
  const i64 x = nt::pow_mod(a, static_cast<u64>(p - 1), p2);
  return nt::mod((x - 1) / p, p);
}

namespace {

void require_bernoulli_range(int m, i64 p) {
  if (p < 5 || !nt::is_prime(static_cast<u64>(p))) {
    throw PreconditionError("bernoulli_mod_p: p must be a prime >= 5");
  }
  if (m < 2 || m > p - 3 || m % 2 != 0) {
    throw PreconditionError("bernoulli_mod_p: need even m with 2 <= m <= p-3, got m=" +
                            std::to_string(m));
  }
}

}  // namespace

std::int64_t voronoi_sum(std::int64_t p, std::int64_t a, int m) {
  i64 acc = 0;
  for (i64 j = 1; j < p; ++j) {
    const i64 fl = (a * j) / p;  // a in [1, p)
    if (fl == 0) continue;
    acc = nt::mod(acc + nt::mul_mod(fl, nt::pow_mod(j, static_cast<u64>(m - 1), p), p), p);
  }
  return acc;
}

std::int64_t voronoi_base(int m, std::int64_t p, std::int64_t start) {
  for (i64 a = std::max<i64>(start, 2); a < p; ++a) {
    if (nt::pow_mod(a, static_cast<u64>(m), p) != 1) return a;
  }
  throw InvariantViolation("voronoi_base: no admissible base");
}

std::int64_t bernoulli_mod_p_with_base(int m, std::int64_t p, std::int64_t a) {
  require_bernoulli_range(m, p);
  a = nt::mod(a, p);
  const i64 am = nt::pow_mod(a, static_cast<u64>(m), p);
  const i64 denom = nt::mod(am * a - a, p);
  if (denom == 0) throw PreconditionError("bernoulli_mod_p: base a has a^{m+1} = a mod p");
  // a^m S = (a^{m+1} - a) B_m / m  =>  B_m = m a^m S / (a^{m+1} - a).
  const i64 lhs = nt::mul_mod(am, voronoi_sum(p, a, m), p);
  return nt::mul_mod(nt::mul_mod(lhs, m, p), nt::inv_mod(denom, p), p);
}

std::int64_t bernoulli_mod_p(int m, std::int64_t p) {
  require_bernoulli_range(m, p);
  return bernoulli_mod_p_with_base(m, p, voronoi_base(m, p));
}

std::vector<std::int64_t> bernoulli_table_mod_p(std::int64_t p) {
  if (p < 5 || !nt::is_prime(static_cast<u64>(p))) {
    throw PreconditionError("bernoulli_table_mod_p: p must be a prime >= 5");
  }
  if (p >= (1LL << 31)) throw PreconditionError("bernoulli_table_mod_p: p too large");
  const auto up = static_cast<u64>(p);
  std::vector<i64> table(static_cast<std::size_t>(p - 2), -1);

  // With a = 2, floor(2j/p) is 1 exactly for j > p/2, so the Voronoi sum is
  // the power sum over the upper half. Track j^{m-1} for all such j at once.
  const u64 half = (up + 1) / 2;
  std::vector<u64> power;  // j^{m-1}
  std::vector<u64> square;
  for (u64 j = half; j < up; ++j) {
    power.push_back(j);  // m = 2
    square.push_back(j * j % up);
  }
  i64 two_m = 4;  // 2^m
  for (int m = 2; m <= p - 3; m += 2) {
    if (two_m != 1) {
      u64 s = 0;
      for (u64 v : power) s += v;
      s %= up;
      const i64 denom = nt::mod(two_m * 2 - 2, p);
      const i64 lhs = nt::mul_mod(two_m, static_cast<i64>(s), p);
      table[static_cast<std::size_t>(m)] =
          nt::mul_mod(nt::mul_mod(lhs, m, p), nt::inv_mod(denom, p), p);
    } else {
      table[static_cast<std::size_t>(m)] = bernoulli_mod_p(m, p);
    }
    for (std::size_t i = 0; i < power.size(); ++i) power[i] = power[i] * square[i] % up;
    two_m = nt::mul_mod(two_m, 4, p);
  }
  return table;
}

CFReport cf_report(std::int64_t p) {
  if (p < 3 || !nt::is_prime(static_cast<u64>(p))) {
    throw PreconditionError("cf_report: p must be an odd prime");
  }
  CFReport report;
  report.p = p;
  if (p >= 5) {
    const auto table = bernoulli_table_mod_p(p);
    for (int k = 2; k <= p - 3; k += 2) {
      if (table[static_cast<std::size_t>(k)] != 0) continue;
      report.irregular_indices.push_back(k);
      const i64 second = voronoi_base(k, p, voronoi_base(k, p) + 1);
      if (bernoulli_mod_p_with_base(k, p, second) != 0) report.confirmed_by_second_base = false;
    }
  }
  report.index_of_irregularity = static_cast<int>(report.irregular_indices.size());
  // i_r < sqrt(p) - 1  <=>  (i_r + 1)^2 < p
  const i64 t = report.index_of_irregularity + 1;
  report.eichler_ok = t * t < p;
  return report;
}

PigeonholeSolution pigeonhole_solve(std::int64_t p, std::span<const std::int64_t> a) {
  if (p < 3 || !nt::is_prime(static_cast<u64>(p))) {
    throw PreconditionError("pigeonhole_solve: p must be an odd prime");
  }
  const auto k = a.size();
  // 1 < k < log2(p)  <=>  k >= 2 and 2^k < p
  if (k < 2 || k >= 62 || (i64{1} << k) >= p) {
    throw PreconditionError("pigeonhole_solve: need 1 < k < log2(p)");
  }
  std::vector<i64> residues(k);
  for (std::size_t i = 0; i < k; ++i) {
    residues[i] = nt::mod(a[i], p);
    if (residues[i] == 0) throw PreconditionError("pigeonhole_solve: a_i must be coprime to p");
    for (std::size_t j = 0; j < i; ++j) {
      if (residues[i] == residues[j] || residues[i] == p - residues[j]) {
        throw PreconditionError("pigeonhole_solve: a_i = +-a_j mod p");
      }
    }
  }
  std::vector<i64> inverses(k);
  for (std::size_t i = 0; i < k; ++i) inverses[i] = nt::inv_mod(residues[i], p);

  i64 root = static_cast<i64>(nt::integer_root(static_cast<u64>(p), static_cast<unsigned>(k)));
  i64 check = 1;
  for (std::size_t i = 0; i < k; ++i) check *= root;
  if (check < p) ++root;
  const i64 bound = 2 * root;

  // Enumerate T^k, first coordinate fastest.
  std::unordered_map<i64, std::vector<std::vector<i64>>> seen;
  std::vector<i64> t(k, 1);
  while (true) {
    i64 value = 0;
    for (std::size_t i = 0; i < k; ++i) value = nt::mod(value + t[i] * residues[i], p);
    auto& bucket = seen[value];
    for (const auto& earlier : bucket) {
      std::vector<i64> b(k);
      for (std::size_t i = 0; i < k; ++i) b[i] = t[i] - earlier[i];
      if (k == 2) {
        i64 dual = 0;
        for (std::size_t i = 0; i < k; ++i) dual = nt::mod(dual + nt::mul_mod(b[i], inverses[i], p), p);
        if (dual == 0) continue;
      }
      return PigeonholeSolution{std::move(b), bound};
    }
    bucket.push_back(t);

    std::size_t pos = 0;
    while (pos < k && t[pos] == bound) {
      t[pos] = 1;
      ++pos;
    }
    if (pos == k) break;
    ++t[pos];
  }
  throw InvariantViolation("pigeonhole_solve: enumeration exhausted without a valid collision");
}

std::int64_t decomposition_order(std::int64_t r, std::int64_t n) {
  if (nt::mod(r, n) == 0) throw PreconditionError("decomposition_order: n divides r");
  return nt::multiplicative_order(nt::mod(r, n), n);
}

GroupRingElement build_mu(int n, std::int64_t p) {
  require_odd_prime(n);
  if (p < 2 || !nt::is_prime(static_cast<u64>(p))) {
    throw PreconditionError("build_mu: p must be prime");
  }
  if (p == n) throw PreconditionError("build_mu: p must differ from n");
  const i64 order = decomposition_order(p, n);
  if (order < 3) {
    throw PreconditionError("build_mu: ord(p mod n) = " + std::to_string(order) + " < 3");
  }

  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n - 1), 0);
  auto bump = [&](i64 c, i64 by) { coeffs[static_cast<std::size_t>(nt::mod(c, n) - 1)] += by; };

  if (p <= 5) {
    bump(1, 1);
    bump(-nt::inv_mod(p, n), p);
  } else {
    std::vector<i64> group;
    i64 x = 1;
    for (i64 i = 0; i < order; ++i) {
      group.push_back(x);
      x = nt::mul_mod(x, p, n);
    }
    std::sort(group.begin(), group.end());
    const i64 c1 = 1;
    i64 c2 = 0;
    for (i64 c : group) {
      if (c != 1 && c != n - 1) {
        c2 = c;
        break;
      }
    }
    const std::vector<i64> a{c1, c2};
    const auto sol = pigeonhole_solve(n, a);
    for (std::size_t i = 0; i < 2; ++i) {
      const i64 h = sol.b[i];
      if (h > 0) bump(a[i], h);
      if (h < 0) bump(n - a[i], -h);  // j sigma_{c} = sigma_{n-c}
    }
  }

  GroupRingElement mu(n, std::move(coeffs));
  if (moment(mu, 1).value != 0 || moment(mu, -1).value == 0 || !mu.is_positive()) {
    throw InvariantViolation("build_mu: constructed element violates its moment conditions");
  }
  return mu;
}

}  // namespace cyclothue
