#include "cyclothue/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "cyclothue/errors.hpp"

namespace cyclothue {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

bool probably_prime(const mpz_class& x) { return mpz_probab_prime_p(x.get_mpz_t(), 40) > 0; }

// One Brent cycle search with x -> x^2 + c; returns a nontrivial factor or 0.
mpz_class brent(const mpz_class& n, unsigned long c, std::uint64_t& budget) {
  mpz_class y = 2, x, q = 1, g = 1, ys, t;
  const std::uint64_t m = 128;
  std::uint64_t r = 1;
  auto step = [&](mpz_class& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      const std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        step(y);
        t = x - y;
        q = q * abs(t);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      if (budget < lim) throw ResourceBoundError("factorization exceeded work bound");
      budget -= lim;
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      step(ys);
      t = x - ys;
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      if (budget == 0) throw ResourceBoundError("factorization exceeded work bound");
      --budget;
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

void split(const mpz_class& n, std::uint64_t& budget, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (probably_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    split(r, budget, out);
    split(r, budget, out);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    const mpz_class d = brent(n, c, budget);
    if (d != 0) {
      split(d, budget, out);
      split(n / d, budget, out);
      return;
    }
  }
}

}  // namespace

std::uint64_t default_work_bound() {
  if (const char* env = std::getenv("CYCLOTHUE_WORK_BOUND")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 100000000ULL;
}

std::vector<PrimePower> factorize(const mpz_class& x, std::uint64_t work_bound) {
  if (x == 0) throw PreconditionError("factorize: zero has no factorization");
  mpz_class n = abs(x);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (static_cast<double>(p) * p > n.get_d() && mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++found[mpz_class(p)];
    }
  }
  std::uint64_t budget = work_bound;
  split(n, budget, found);
  std::vector<PrimePower> out;
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

}  // namespace cyclothue
