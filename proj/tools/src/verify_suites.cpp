#include "cyclothue/verify_suites.hpp"

#include <algorithm>

#include "cyclothue/cyclotomic.hpp"
#include "cyclothue/errors.hpp"
#include "cyclothue/modular.hpp"
#include "cyclothue/numtheory.hpp"
#include "cyclothue/series.hpp"
#include "cyclothue/stickelberger.hpp"

namespace cyclothue {

using nt::i64;

namespace {

class Tally {
 public:
  Tally(std::string suite, std::string check) { c_.suite = std::move(suite); c_.check = std::move(check); }

  void expect(bool ok, const std::string& what) {
    ++c_.cases;
    if (!ok) {
      if (c_.failures == 0) c_.first_failure = what;
      ++c_.failures;
    }
  }
  void skip() { ++c_.skipped; }
  SuiteCheck done() { return std::move(c_); }

 private:
  SuiteCheck c_;
};

std::string k_label(const char* name, i64 k) { return std::string(name) + "=" + std::to_string(k); }

}  // namespace

std::vector<SuiteCheck> stickelberger_suite(int n) {
  require_odd_prime(n);
  std::vector<SuiteCheck> out;
  const i64 half = (n - 1) / 2;

  Tally gen("stickelberger", "fueter_fuchsian");
  gen.expect(fueter(n, 1) == fuchsian(n, 2), "psi_1 != Theta_2");
  for (int k = 2; k <= n - 1; ++k) {
    gen.expect(fueter(n, k) == fuchsian(n, k + 1) - fuchsian(n, k), k_label("k", k));
  }
  gen.expect(fueter(n, n - 1) == GroupRingElement::norm_element(n), "psi_{n-1} != N");
  out.push_back(gen.done());

  Tally aug("stickelberger", "augmentation");
  auto check_aug = [&](const GroupRingElement& t, const std::string& label) {
    const auto w = weights(t);
    aug.expect(w.relative_weight && w.augmentation == *w.relative_weight * half, label);
  };
  for (int k = 1; k <= n - 1; ++k) check_aug(fueter(n, k), k_label("psi", k));
  for (int k = 2; k <= n; ++k) check_aug(fuchsian(n, k), k_label("Theta", k));
  out.push_back(aug.done());

  Tally refl("stickelberger", "reflection");
  for (int k = 2; k < n - 1; ++k) {
    const i64 lhs = fermat_map(fuchsian(n, n - k));
    const i64 rhs = nt::mod(n - (1 + fermat_map(fuchsian(n, k))), n);
    refl.expect(lhs == rhs, k_label("k", k));
  }
  out.push_back(refl.done());

  Tally vor("stickelberger", "voronoi");
  if (n >= 5) {
    for (int m = 2; m <= n - 3; m += 2) {
      for (i64 a = 1; a < n; ++a) {
        const auto r = voronoi_check(n, a, m);
        vor.expect(r.status == VoronoiCheck::Status::holds, "a=" + std::to_string(a) + " m=" + std::to_string(m));
      }
    }
  } else {
    vor.skip();
  }
  out.push_back(vor.done());

  Tally fq("stickelberger", "fermat_quotient");
  for (i64 a = 1; a < n; ++a) {
    fq.expect(voronoi_fermat_check(n, a).status == VoronoiCheck::Status::holds, k_label("voronoi a", a));
    if (a >= 2) {
      const i64 expected = nt::mul_mod(a, fermat_quotient_int(a, n), n);
      fq.expect(fermat_map(fuchsian(n, static_cast<int>(a))) == expected, k_label("Theta a", a));
    }
  }
  out.push_back(fq.done());

  Tally mm("stickelberger", "moment_minus_one");
  if (n >= 5) {
    const i64 inv12 = nt::inv_mod(12, n);
    int roots = 0;
    for (i64 k = 1; k <= n - 2; ++k) {
      const i64 v = moment(fueter(n, static_cast<int>(k)), -1).value;
      const i64 kk = nt::mul_mod(k, k + 1, n);
      if (kk != 0) {
        const i64 expected = nt::mul_mod(inv12, 1 + nt::inv_mod(kk, n), n);
        mm.expect(v == expected, k_label("k", k));
      }
      const bool root = nt::mod(k * k + k + 1, n) == 0;
      mm.expect((v == 0) == root, k_label("zero k", k));
      roots += root ? 1 : 0;
    }
    mm.expect(roots == (n % 6 == 1 ? 2 : 0), "root count");
  } else {
    mm.skip();
  }
  out.push_back(mm.done());
  return out;
}

std::vector<SuiteCheck> cyclotomic_suite(int n, int max_order) {
  require_odd_prime(n);
  if (max_order < 1) throw PreconditionError("max_order must be at least 1");
  std::vector<SuiteCheck> out;
  const CycInt zeta = CycInt::zeta_power(n, 1);
  const CycInt one = CycInt::from_integer(n, 1);
  const CycInt lambda = CycInt::lambda(n);
  const i64 inv2 = nt::inv_mod(2, n);

  std::vector<GroupRingElement> basis;
  for (int k = 1; k <= n - 1; ++k) basis.push_back(fueter(n, k));
  std::vector<GroupRingElement> doubled;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) doubled.push_back(basis[i] + basis[j]);
  }

  Tally fc("cyclotomic", "power_identities");
  auto check_fc = [&](const GroupRingElement& t, const std::string& label) {
    const i64 phi = fermat_map(t);
    fc.expect(galois_pow(zeta, t) == CycInt::zeta_power(n, phi), label + " zeta");
    // 1 + zeta^c = (-1)^c zeta^{c/2} 2cos(pi c/n), the cosine being negative for c > n/2.
    i64 parity = 0;
    for (i64 c = 1; c < n; ++c) parity += t.coeff(c) * (c + (2 * c > n ? 1 : 0));
    const CycInt expected = CycInt::zeta_power(n, nt::mul_mod(phi, inv2, n));
    fc.expect(galois_pow(one + zeta, t) == (parity % 2 == 0 ? expected : -expected), label + " 1+zeta");
    if (weights(t).relative_weight == 2) {
      fc.expect(galois_pow(lambda, 2 * t) == mpz_class(n) * mpz_class(n) * CycInt::zeta_power(n, phi),
                label + " lambda");
    }
  };
  for (std::size_t i = 0; i < basis.size(); ++i) check_fc(basis[i], k_label("psi", static_cast<i64>(i + 1)));
  for (std::size_t i = 0; i < doubled.size(); ++i) check_fc(doubled[i], k_label("pair", static_cast<i64>(i)));
  out.push_back(fc.done());

  Tally lam("cyclotomic", "lambda_adic");
  std::vector<CycInt> samples{CycInt(n), one, zeta, lambda, lambda.pow(3), one + zeta};
  for (i64 k = 2; k < n; ++k) samples.push_back(CycInt::zeta_power(n, k));
  for (const auto& a : samples) {
    try {
      const auto ex = lambda_expand(a, 64 * static_cast<std::size_t>(n));
      const bool digits_ok = std::all_of(ex.digits.begin(), ex.digits.end(),
                                         [&](i64 d) { return 2 * d <= n - 1 && -2 * d <= n - 1; });
      lam.expect(digits_ok && lambda_reconstruct(n, ex.digits) == a, a.to_string());
    } catch (const ResourceBoundError&) {
      lam.skip();
    }
  }
  out.push_back(lam.done());

  const int top = std::min(max_order, n - 1);
  std::vector<GroupRingElement> thetas{GroupRingElement(n), GroupRingElement::norm_element(n),
                                       2 * fueter(n, 1)};
  for (int k = 1; k <= (n - 1) / 2; ++k) thetas.push_back(fueter(n, k));

  Tally ser("cyclotomic", "series");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (int N = 1; N <= top; ++N) {
      const std::string label = "theta#" + std::to_string(i) + " N=" + std::to_string(N);
      try {
        const auto s = series_expand(thetas[i], N);
        ser.expect(s.b[1] == rho(thetas[i]), label + " b_1");
        ser.expect(s.b == series_b(thetas[i], N), label + " integral form");
      } catch (const InvariantViolation& e) {
        ser.expect(false, label + ": " + e.what());
      }
    }
  }
  out.push_back(ser.done());

  Tally reg("cyclotomic", "regularity");
  const int max_j = std::min<int>(top, (n - 1) / 2);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (moment(thetas[i], -1).value == 0) {
      reg.skip();
      continue;
    }
    for (int N = 1; N <= max_j; ++N) {
      std::vector<i64> J;
      for (int c = 1; c <= N; ++c) J.push_back(c);
      const auto r = regularity_check(thetas[i], J);
      reg.expect(r.matches && r.regular, "theta#" + std::to_string(i) + " N=" + std::to_string(N));
    }
  }
  out.push_back(reg.done());
  return out;
}

}  // namespace cyclothue
