#include "cyclothue/residue_field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cyclothue/errors.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

using nt::i64;

namespace {

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly poly_add(const FpPoly& a, const FpPoly& b, i64 p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = nt::mod(r[i] + b[i], p);
  trim(r);
  return r;
}

FpPoly poly_sub(const FpPoly& a, const FpPoly& b, i64 p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = nt::mod(r[i] - b[i], p);
  trim(r);
  return r;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = nt::mod(r[i + j] + nt::mul_mod(a[i], b[j], p), p);
    }
  }
  trim(r);
  return r;
}

// Remainder of a modulo the nonzero polynomial m; quotient written to q.
FpPoly poly_divmod(FpPoly a, const FpPoly& m, i64 p, FpPoly* q = nullptr) {
  const i64 lead_inv = nt::inv_mod(m.back(), p);
  const std::size_t dm = m.size() - 1;
  if (q) q->assign(a.size() >= m.size() ? a.size() - dm : 0, 0);
  while (a.size() >= m.size()) {
    const i64 f = nt::mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    if (q) (*q)[shift] = f;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = nt::mod(a[shift + i] - nt::mul_mod(f, m[i], p), p);
    }
    trim(a);
  }
  if (q) trim(*q);
  return a;
}

FpPoly poly_monic(FpPoly a, i64 p) {
  if (a.empty()) return a;
  const i64 inv = nt::inv_mod(a.back(), p);
  for (auto& c : a) c = nt::mul_mod(c, inv, p);
  return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, i64 p) {
  while (!b.empty()) {
    FpPoly r = poly_divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, p);
}

FpPoly poly_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& m, i64 p) {
  FpPoly result{1};
  result = poly_divmod(result, m, p);
  const FpPoly b = poly_divmod(base, m, p);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_divmod(poly_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_divmod(poly_mul(result, b, p), m, p);
  }
  return result;
}

// Splits f, a product of distinct monic irreducibles of degree d, into its
// factors (Cantor-Zassenhaus; trace map in characteristic 2).
void equal_degree_split(const FpPoly& f, int d, i64 p, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == d) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<i64> coef(0, p - 1);
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  for (;;) {
    FpPoly a(static_cast<std::size_t>(deg), 0);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (a.size() < 2) continue;
    FpPoly h;
    if (p == 2) {
      FpPoly term = a;
      h = a;
      for (int i = 1; i < d; ++i) {
        term = poly_divmod(poly_mul(term, term, p), f, p);
        h = poly_add(h, term, p);
      }
    } else {
      h = poly_sub(poly_powmod(a, (q - 1) / 2, f, p), FpPoly{1}, p);
    }
    FpPoly g = poly_gcd(f, h, p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg <= 0 || dg == deg) continue;
    FpPoly cofactor;
    poly_divmod(f, g, p, &cofactor);
    equal_degree_split(g, d, p, rng, out);
    equal_degree_split(poly_monic(cofactor, p), d, p, rng, out);
    return;
  }
}

std::string poly_string(const FpPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    if (i == 0 || a[i] != 1) os << a[i];
    if (i > 0) os << (a[i] != 1 ? "*x" : "x");
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string ResidueFieldElem::to_string() const { return poly_string(coeffs_); }

ResidueField::ResidueField(i64 p, int n, FpPoly modulus) : p_(p), n_(n), g_(std::move(modulus)) {
  trim(g_);
  if (g_.size() < 2 || g_.back() != 1) throw PreconditionError("ResidueField: modulus must be monic of degree >= 1");
}

ResidueFieldElem ResidueField::make(FpPoly c) const {
  for (auto& x : c) x = nt::mod(x, p_);
  trim(c);
  return ResidueFieldElem(poly_divmod(std::move(c), g_, p_));
}

ResidueFieldElem ResidueField::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p_));
  return make(FpPoly{r.get_si()});
}

ResidueFieldElem ResidueField::zeta() const { return make(FpPoly{0, 1}); }

ResidueFieldElem ResidueField::add(const ResidueFieldElem& a, const ResidueFieldElem& b) const {
  return ResidueFieldElem(poly_add(a.coeffs_, b.coeffs_, p_));
}

ResidueFieldElem ResidueField::sub(const ResidueFieldElem& a, const ResidueFieldElem& b) const {
  return ResidueFieldElem(poly_sub(a.coeffs_, b.coeffs_, p_));
}

ResidueFieldElem ResidueField::mul(const ResidueFieldElem& a, const ResidueFieldElem& b) const {
  return ResidueFieldElem(poly_divmod(poly_mul(a.coeffs_, b.coeffs_, p_), g_, p_));
}

ResidueFieldElem ResidueField::pow(const ResidueFieldElem& a, const mpz_class& e) const {
  if (e < 0) throw PreconditionError("ResidueField::pow: negative exponent");
  return ResidueFieldElem(poly_powmod(a.coeffs_, e, g_, p_));
}

std::string ResidueField::to_string() const {
  return "F_" + std::to_string(p_) + "[x]/(" + poly_string(g_) + ")";
}

std::vector<ResidueField> prime_ideals_above(i64 p, int n) {
  require_odd_prime(n);
  if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p))) {
    throw PreconditionError("prime_ideals_above: p must be prime");
  }
  if (p == n) throw PreconditionError("prime_ideals_above: p must differ from n");
  const int d = static_cast<int>(nt::multiplicative_order(p, n));
  const FpPoly phi(static_cast<std::size_t>(n), 1);
  std::vector<FpPoly> factors;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(p * 131 + n));
  equal_degree_split(phi, d, p, rng, factors);
  std::sort(factors.begin(), factors.end());
  std::vector<ResidueField> out;
  out.reserve(factors.size());
  for (auto& g : factors) out.emplace_back(p, n, std::move(g));
  return out;
}

ResidueFieldElem residue_reduce(const CycInt& a, const ResidueField& field) {
  if (a.conductor() != field.conductor()) throw PreconditionError("residue_reduce: conductor mismatch");
  const i64 p = field.characteristic();
  FpPoly c;
  c.reserve(a.coefficients().size());
  for (const auto& v : a.coefficients()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    c.push_back(r.get_si());
  }
  return field.from_polynomial(std::move(c));
}

}  // namespace cyclothue
