#include "cyclothue/equation.hpp"

#include <algorithm>
#include <set>

#include "cyclothue/errors.hpp"
#include "cyclothue/groupring.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

using nt::i64;

namespace {

mpz_class zpow(i64 base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), mpz_class(base).get_mpz_t(), e);
  return r;
}

void require_parameters(i64 B, i64 n) {
  if (B <= 1) throw PreconditionError("B must be > 1");
  if (n <= 1) throw PreconditionError("n must be > 1");
}

void require_prime_exponent(i64 n) {
  if (n < 2 || !nt::is_prime(static_cast<nt::u64>(n))) throw PreconditionError("n must be prime");
}

}  // namespace

i64 phi_star(i64 B) {
  if (B <= 1) throw PreconditionError("phi_star: B must be > 1");
  i64 out = 1;
  for (const auto& [q, e] : nt::factor_small(B)) {
    (void)e;
    out *= q - 1;
  }
  return out;
}

bool nosplit_holds(i64 B, i64 n) {
  require_parameters(B, n);
  return nt::gcd(n, phi_star(B)) == 1;
}

bool in_exponent_set(i64 B, i64 n) {
  require_parameters(B, n);
  const i64 f = phi_star(B);
  for (const auto& [q, e] : nt::factor_small(n)) {
    (void)e;
    if (f % q != 0) return false;
  }
  return true;
}

bool is_solution(i64 B, i64 n, i64 X, const mpz_class& Z) {
  if (n < 1) return false;
  mpz_class zn;
  mpz_pow_ui(zn.get_mpz_t(), Z.get_mpz_t(), static_cast<unsigned long>(n));
  return zpow(X, static_cast<unsigned long>(n)) - 1 == B * zn;
}

NLCofactors nl_cofactors(i64 X, int n) {
  require_odd_prime(n);
  if (X == 1) throw PreconditionError("nl_cofactors: X must differ from 1");
  NLCofactors out;
  out.u = nt::mod(X, n);
  out.e = out.u == 1 ? 1 : 0;
  out.D = X - 1;
  const mpz_class P = (zpow(X, static_cast<unsigned long>(n)) - 1) / out.D;
  out.F = out.e ? P / n : P;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), P.get_mpz_t(), out.D.get_mpz_t());
  out.delta = g.get_si();
  out.c_X = out.e ? 0 : nt::inv_mod(X - 1, n);
  return out;
}

ReductionRecord reduce(i64 X, int n, i64 B) { return reduce(X, n, B, default_work_bound()); }

ReductionRecord reduce(i64 X, int n, i64 B, std::uint64_t work_bound) {
  require_odd_prime(n);
  require_parameters(B, n);
  const mpz_class lhs = zpow(X, static_cast<unsigned long>(n)) - 1;
  if (!mpz_divisible_p(lhs.get_mpz_t(), mpz_class(B).get_mpz_t())) {
    throw PreconditionError("reduce: B does not divide X^n - 1");
  }
  mpz_class zn = lhs / B;
  mpz_class Z;
  if (mpz_root(Z.get_mpz_t(), zn.get_mpz_t(), static_cast<unsigned long>(n)) == 0) {
    throw PreconditionError("reduce: (X^n - 1)/B is not an n-th power");
  }
  if (!nosplit_holds(B, n)) throw PreconditionError("reduce: nosplit condition fails");

  ReductionRecord rec;
  rec.X = X;
  rec.n = n;
  rec.B = B;
  rec.Z = Z;
  rec.cof = nl_cofactors(X, n);
  rec.F_factors = factorize(rec.cof.F, work_bound);
  rec.Y = 1;
  for (const auto& pp : rec.F_factors) {
    if (mpz_fdiv_ui(pp.prime.get_mpz_t(), static_cast<unsigned long>(n)) != 1) {
      throw PreconditionError("reduce: F has a prime factor " + pp.prime.get_str() + " != 1 mod n");
    }
    if (pp.exponent % static_cast<unsigned>(n) != 0) {
      throw PreconditionError("reduce: F is not an n-th power");
    }
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent / static_cast<unsigned>(n));
    rec.Y *= t;
  }
  if (!mpz_divisible_p(rec.Z.get_mpz_t(), rec.Y.get_mpz_t())) {
    throw InvariantViolation("reduce: Y does not divide Z");
  }
  rec.C = rec.Z / rec.Y;
  mpz_class cn;
  mpz_pow_ui(cn.get_mpz_t(), rec.C.get_mpz_t(), static_cast<unsigned long>(n));
  const mpz_class ne = rec.cof.e ? mpz_class(n) : mpz_class(1);
  if (rec.cof.D * ne != B * cn) throw InvariantViolation("reduce: X - 1 != B C^n / n^e");
  return rec;
}

BoundsCase bounds(int n, i64 u) {
  require_odd_prime(n);
  if (n < 17) throw PreconditionError("bounds: n must be at least 17");
  BoundsCase out;
  out.n = n;
  out.C_bound = 2 * static_cast<i64>(n) - 1;
  const i64 r = nt::mod(u, n);
  if (r == 0) {
    out.kind = BoundsKind::u_zero;
    out.E = zpow(4 * static_cast<i64>(n), static_cast<unsigned long>((n - 1) / 2));
  } else if (r == 1 || r == n - 1) {
    out.kind = BoundsKind::u_plus_minus_one;
    out.E = 4 * zpow(n - 2, static_cast<unsigned long>(n));
  } else {
    // 4 m^{(n+2)/2} with a half-integer exponent: ceil(sqrt(16 m^{n+2})).
    out.kind = BoundsKind::generic;
    const mpz_class sq = 16 * zpow((n - 3) / 2, static_cast<unsigned long>(n + 2));
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), sq.get_mpz_t());
    if (s * s < sq) s += 1;
    out.E = s;
  }
  return out;
}

std::string to_string(BoundsKind kind) {
  switch (kind) {
    case BoundsKind::generic: return "u_not_in_-1_0_1";
    case BoundsKind::u_zero: return "u_zero";
    case BoundsKind::u_plus_minus_one: return "u_plus_minus_one";
  }
  return "unknown";
}

std::vector<WieferichEntry> wieferich_battery(i64 X, int n) {
  require_prime_exponent(n);
  std::set<i64> primes{2, 3};
  const mpz_class prod = mpz_class(X) * (mpz_class(X) * X - 1);
  if (prod != 0) {
    for (const auto& pp : factorize(prod, default_work_bound())) {
      if (!pp.prime.fits_slong_p()) throw ResourceBoundError("wieferich_battery: prime factor too large");
      primes.insert(pp.prime.get_si());
    }
  }
  const i64 n2 = static_cast<i64>(n) * n;
  std::vector<WieferichEntry> out;
  for (const i64 r : primes) {
    if (r == n) continue;
    out.push_back({r, nt::pow_mod(r, static_cast<nt::u64>(n - 1), n2) == 1});
  }
  return out;
}

CriteriaReport criteria_report(i64 X, const mpz_class& Z, i64 B, int n) {
  require_prime_exponent(n);
  require_parameters(B, n);
  if (!is_solution(B, n, X, Z)) throw PreconditionError("criteria_report: (X, Z) does not solve X^n - 1 = B Z^n");
  if (!nosplit_holds(B, n)) throw PreconditionError("criteria_report: nosplit condition fails");
  CriteriaReport rep;
  rep.part_a = n > 163000000;
  const bool e = nt::mod(X, n) == 1;
  const i64 ne = e ? n : 1;
  if (B % ne == 0) {
    const i64 q = B / ne;
    rep.part_b = (X - 1 == q || X - 1 == -q) && mpz_class(B) < zpow(n, static_cast<unsigned long>(n));
  }
  rep.battery = wieferich_battery(X, n);
  rep.part_c = std::all_of(rep.battery.begin(), rep.battery.end(), [](const auto& w) { return w.holds; });
  rep.known_exception = X == 18 && Z == 7 && B == 17 && n == 3;
  return rep;
}

Classification classify_exponent(i64 B, i64 n) {
  require_parameters(B, n);
  const i64 f = phi_star(B);
  Classification out;
  out.m = 1;
  std::vector<std::pair<i64, int>> rest;
  for (const auto& [q, e] : nt::factor_small(n)) {
    if (f % q == 0) {
      for (int i = 0; i < e; ++i) out.m *= q;
    } else {
      rest.emplace_back(q, e);
    }
  }
  if (rest.empty()) {
    out.kind = ExponentClass::in_exponent_set;
  } else if (rest.size() == 1 && rest[0].second == 1) {
    out.kind = ExponentClass::reduces_to_prime;
    out.p = rest[0].first;
  } else if (rest.size() == 1) {
    out.kind = ExponentClass::excluded_prime_power;
    out.p = rest[0].first;
  } else {
    int odd_coprime = 0;
    for (const auto& [q, e] : rest) {
      (void)e;
      if (q > 2 && B % q != 0) ++odd_coprime;
    }
    out.kind = odd_coprime >= 2 ? ExponentClass::excluded_two_coprime_primes : ExponentClass::excluded_mixed;
  }
  return out;
}

std::string to_string(ExponentClass kind) {
  switch (kind) {
    case ExponentClass::in_exponent_set: return "IN_N_B";
    case ExponentClass::reduces_to_prime: return "REDUCES_TO_PRIME";
    case ExponentClass::excluded_two_coprime_primes: return "EXCLUDED_TWO_COPRIME_PRIMES";
    case ExponentClass::excluded_mixed: return "EXCLUDED_MIXED";
    case ExponentClass::excluded_prime_power: return "EXCLUDED_PRIME_POWER";
  }
  return "UNKNOWN";
}

bool monotone_f_check(i64 p, i64 X, int t_max, MonotoneVariant variant) {
  if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p))) throw PreconditionError("monotone_f_check: p must be prime");
  if (X > -2 && X < 2) throw PreconditionError("monotone_f_check: |X| must be at least 2");
  if (t_max < 1) throw PreconditionError("monotone_f_check: t_max must be at least 1");
  const mpz_class xp1 = zpow(X, static_cast<unsigned long>(p)) - 1;
  std::vector<mpz_class> f;
  for (int t = 0; t <= t_max; ++t) {
    const mpz_class head = p * (zpow(X, static_cast<unsigned long>(p + t)) - 1);
    f.push_back(variant == MonotoneVariant::two_prime ? mpz_class(head - (p + t) * xp1) : mpz_class(head - xp1));
  }
  if (variant == MonotoneVariant::two_prime ? f[0] != 0 : f[0] == 0) return false;
  for (int t = 1; t <= t_max; ++t) {
    if (f[static_cast<std::size_t>(t)] == 0) return false;
  }
  if (X >= 2) {
    for (int t = 0; t < t_max; ++t) {
      if (!(f[static_cast<std::size_t>(t)] < f[static_cast<std::size_t>(t + 1)])) return false;
    }
    return true;
  }
  for (int start = 0; start < 2; ++start) {
    int dir = 0;
    for (int t = start; t + 2 <= t_max; t += 2) {
      const int s = sgn(f[static_cast<std::size_t>(t + 2)] - f[static_cast<std::size_t>(t)]);
      if (s == 0 || (dir != 0 && s != dir)) return false;
      dir = s;
    }
  }
  return true;
}

PrimePowerEvidence prime_power_check(i64 B, i64 p, int c) {
  if (B <= 1) throw PreconditionError("prime_power_check: B must be > 1");
  if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p))) throw PreconditionError("prime_power_check: p must be prime");
  if (c < 2) throw PreconditionError("prime_power_check: needs c >= 2");
  if (phi_star(B) % p == 0) throw PreconditionError("prime_power_check: p must be coprime to phi*(B)");
  PrimePowerEvidence ev;
  ev.B = B;
  ev.p = p;
  ev.c = c;
  if (c == 2) {
    const i64 p2 = p * p;
    i64 ell = p2 + 1;
    while (!nt::is_prime(static_cast<nt::u64>(ell))) ell += p2;
    ev.ell = ell;
    ev.lower = ell;
    ev.upper = p + 1;
  } else {
    const mpz_class e = zpow(p, static_cast<unsigned long>(c - 1));
    if (e > 1 << 26) throw ResourceBoundError("prime_power_check: exponent p^(c-1) too large");
    ev.lower = zpow(2, e.get_ui()) - 1;
    ev.upper = zpow(p, static_cast<unsigned long>(p));
  }
  ev.excluded = ev.lower >= ev.upper;
  return ev;
}

}  // namespace cyclothue
