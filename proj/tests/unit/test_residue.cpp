#include <doctest.h>

#include <random>

#include "cyclothue/errors.hpp"
#include "cyclothue/residue_field.hpp"
#include "cyclothue/stickelberger.hpp"
#include "cyclothue/theta_congruence.hpp"
#include "oracles.hpp"

using namespace cyclothue;

namespace {

using Poly = std::vector<std::int64_t>;

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = oracle::mod(out[i + j] + a[i] * b[j], p);
  }
  return out;
}

oracle::Cyc zeta_full(int n, std::int64_t k) {
  oracle::Cyc v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(oracle::mod(k, n))] = 1;
  return v;
}

// (zeta^{c_X} alpha)^{2 theta} - Y^{s n}, and whether p divides it in Z[zeta]
bool congruence_oracle(std::int64_t X, std::int64_t Y, int n, const GroupRingElement& t, std::int64_t p) {
  oracle::Cyc alpha(static_cast<std::size_t>(n), 0);
  alpha[0] = X;
  alpha[1] = -1;
  std::int64_t cx = 0;
  if (oracle::mod(X, n) == 1) {
    // alpha = (X - 1)/n * prod_{c >= 2} (1 - zeta^c) + 1
    oracle::Cyc q(static_cast<std::size_t>(n), 0);
    q[0] = 1;
    for (std::int64_t c = 2; c < n; ++c) {
      oracle::Cyc f(static_cast<std::size_t>(n), 0);
      f[0] = 1;
      f[static_cast<std::size_t>(c)] = -1;
      q = oracle::cyc_mul(q, f);
    }
    for (auto& c : q) c *= (X - 1) / n;
    q[0] += 1;
    alpha = q;
  } else {
    cx = oracle::invmod(X - 1, n);
  }
  const auto base = oracle::cyc_mul(zeta_full(n, cx), alpha);
  oracle::Cyc lhs = zeta_full(n, 0);
  for (std::int64_t c = 1; c < n; ++c) {
    lhs = oracle::cyc_mul(lhs, oracle::cyc_pow(oracle::cyc_galois(base, c), static_cast<unsigned>(2 * t.coeff(c))));
  }
  const auto s = *weights(t).relative_weight;
  mpz_class rhs;
  mpz_class yb = Y;
  mpz_pow_ui(rhs.get_mpz_t(), yb.get_mpz_t(), static_cast<unsigned long>(s * n));
  lhs[0] -= rhs;
  for (const auto& c : oracle::cyc_canonical(lhs)) {
    if (c % p != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("prime ideals above p factor the cyclotomic polynomial") {
  for (int n : {3, 5, 7, 11, 13}) {
    for (std::int64_t p : oracle::primes(2, 60)) {
      if (p == n) continue;
      const auto fields = prime_ideals_above(p, n);
      std::int64_t f = 1;
      while (oracle::powmod(p, f, n) != 1) ++f;
      CHECK(fields.size() == static_cast<std::size_t>((n - 1) / f));
      Poly prod{1};
      for (std::size_t i = 0; i < fields.size(); ++i) {
        CHECK(fields[i].degree() == f);
        CHECK(fields[i].modulus().back() == 1);
        if (i > 0) CHECK(fields[i - 1].modulus() < fields[i].modulus());
        prod = poly_mul(prod, fields[i].modulus(), p);
      }
      CHECK(prod == Poly(static_cast<std::size_t>(n), 1));
    }
  }
  CHECK_THROWS_AS(prime_ideals_above(7, 7), PreconditionError);
  CHECK_THROWS_AS(prime_ideals_above(9, 7), PreconditionError);
}

TEST_CASE("residue fields are fields of the right size") {
  std::mt19937_64 rng(31);
  for (auto [p, n] : {std::pair<std::int64_t, int>{2, 7}, {3, 7}, {2, 5}, {17, 3}, {5, 13}, {23, 11}}) {
    for (const auto& field : prime_ideals_above(p, n)) {
      const auto z = field.zeta();
      CHECK(field.pow(z, n) == field.from_integer(1));
      CHECK(z != field.from_integer(1));
      mpz_class q;
      mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(field.degree()));
      for (int trial = 0; trial < 5; ++trial) {
        Poly c(static_cast<std::size_t>(field.degree()));
        for (auto& x : c) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
        const auto a = field.from_polynomial(c);
        CHECK(field.pow(a, q) == a);
        if (!a.is_zero()) CHECK(field.pow(a, q - 1) == field.from_integer(1));
      }
    }
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(32);
  for (auto [p, n] : {std::pair<std::int64_t, int>{2, 7}, {11, 5}, {29, 7}, {3, 13}}) {
    for (const auto& field : prime_ideals_above(p, n)) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<mpz_class> x(static_cast<std::size_t>(n - 1));
        std::vector<mpz_class> y(static_cast<std::size_t>(n - 1));
        for (auto& v : x) v = static_cast<long>(rng() % 200) - 100;
        for (auto& v : y) v = static_cast<long>(rng() % 200) - 100;
        const CycInt a(n, x);
        const CycInt b(n, y);
        CHECK(residue_reduce(a * b, field) == field.mul(residue_reduce(a, field), residue_reduce(b, field)));
        CHECK(residue_reduce(a - b, field) == field.sub(residue_reduce(a, field), residue_reduce(b, field)));
      }
      CHECK(residue_reduce(CycInt::zeta_power(n, 1), field) == field.zeta());
      CHECK(residue_reduce(CycInt::from_integer(n, p), field).is_zero());
    }
  }
}

TEST_CASE("theta congruence at the known solution") {
  const auto thetas = positive_fermat_elements(3, 2);
  REQUIRE(thetas.size() == 1);
  CHECK(thetas[0] == GroupRingElement::norm_element(3));
  CHECK(lemma_theta_verify(18, 7, 3, thetas[0], 17));
  CHECK_FALSE(lemma_theta_verify(18, 6, 3, thetas[0], 17));
  CHECK(congruence_oracle(18, 7, 3, thetas[0], 17));
  CHECK_FALSE(congruence_oracle(18, 6, 3, thetas[0], 17));
  // (-19)^3 - 1 = 20 (-7)^3 gives the same shape with X - 1 = -20
  CHECK(lemma_theta_verify(-19, -7, 3, thetas[0], 5));
  CHECK(lemma_theta_verify(-19, -7, 3, thetas[0], 2));
}

TEST_CASE("theta congruence agrees with divisibility by p") {
  std::mt19937_64 rng(33);
  int agree = 0;
  int holds = 0;
  for (int n : {5, 7}) {
    const auto thetas = positive_fermat_elements(n, 2);
    REQUIRE_FALSE(thetas.empty());
    for (int trial = 0; trial < 80; ++trial) {
      const auto& t = thetas[rng() % thetas.size()];
      const std::int64_t p = oracle::primes(2, 40)[rng() % 12];
      if (p == n) continue;
      // X = 1 + p k, both residue classes of X mod n appear
      const std::int64_t X = 1 + p * (static_cast<std::int64_t>(rng() % 9) - 4);
      const std::int64_t Y = static_cast<std::int64_t>(rng() % 30) + 1;
      if (X == 1 || Y % p == 0) continue;
      const bool got = lemma_theta_verify(X, Y, n, t, p);
      CHECK(got == congruence_oracle(X, Y, n, t, p));
      ++agree;
      if (got) ++holds;
    }
  }
  CHECK(agree > 60);
  CHECK(holds > 0);
}

TEST_CASE("theta congruence preconditions") {
  const auto norm = GroupRingElement::norm_element(3);
  CHECK_THROWS_AS(lemma_theta_verify(18, 7, 3, norm, 5), PreconditionError);
  CHECK_THROWS_AS(lemma_theta_verify(18, 7, 3, norm, 7), PreconditionError);
  CHECK_THROWS_AS(lemma_theta_verify(18, 7, 3, GroupRingElement::one(3), 17), PreconditionError);
  CHECK_THROWS_AS(lemma_theta_verify(18, 7, 3, norm, 16), PreconditionError);
}
