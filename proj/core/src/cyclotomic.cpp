#include "cyclothue/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cyclothue/errors.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

using nt::i64;

namespace {

void require_same_conductor(int a, int b) {
  if (a != b) {
    throw PreconditionError("cyclotomic conductor mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

// Folds a length-n vector over 1..zeta^{n-1} into the power basis.
std::vector<mpz_class> reduce_full(std::vector<mpz_class> full, int n) {
  const mpz_class top = full[static_cast<std::size_t>(n - 1)];
  full.resize(static_cast<std::size_t>(n - 1));
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

}  // namespace

CycInt::CycInt(int n) : n_(n) {
  require_odd_prime(n);
  coeffs_.assign(static_cast<std::size_t>(n - 1), mpz_class(0));
}

CycInt::CycInt(int n, std::vector<mpz_class> coeffs) : n_(n) {
  require_odd_prime(n);
  if (coeffs.size() == static_cast<std::size_t>(n)) {
    coeffs_ = reduce_full(std::move(coeffs), n);
  } else if (coeffs.size() == static_cast<std::size_t>(n - 1)) {
    coeffs_ = std::move(coeffs);
  } else {
    throw PreconditionError("CycInt needs n-1 or n coefficients");
  }
}

CycInt CycInt::from_integer(int n, const mpz_class& value) {
  CycInt out(n);
  out.coeffs_[0] = value;
  return out;
}

CycInt CycInt::zeta_power(int n, std::int64_t k) {
  require_odd_prime(n);
  std::vector<mpz_class> full(static_cast<std::size_t>(n), mpz_class(0));
  full[static_cast<std::size_t>(nt::mod(k, n))] = 1;
  return CycInt(n, std::move(full));
}

CycInt CycInt::lambda(int n) { return from_integer(n, 1) - zeta_power(n, 1); }

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycInt CycInt::galois(std::int64_t a) const {
  const i64 s = nt::mod(a, n_);
  if (s == 0) throw PreconditionError("galois: a must be coprime to n");
  std::vector<mpz_class> full(static_cast<std::size_t>(n_), mpz_class(0));
  for (i64 i = 0; i < n_ - 1; ++i) {
    full[static_cast<std::size_t>(nt::mul_mod(s, i, n_))] = coeffs_[static_cast<std::size_t>(i)];
  }
  return CycInt(n_, std::move(full));
}

CycInt CycInt::pow(std::uint64_t e) const {
  CycInt result = from_integer(n_, 1);
  CycInt base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

mpz_class CycInt::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool CycInt::divisible_by(const mpz_class& d) const {
  if (d == 0) return is_zero();
  for (const auto& c : coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

CycInt CycInt::divided_by(const mpz_class& d) const {
  if (!divisible_by(d) || d == 0) throw InvariantViolation("CycInt::divided_by: inexact division");
  CycInt out(*this);
  for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return out;
}

std::int64_t CycInt::mod_lambda() const {
  mpz_class sum = 0;
  for (const auto& c : coeffs_) sum += c;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n_));
  return r.get_si();
}

std::complex<double> CycInt::embed(std::int64_t c) const {
  std::complex<double> acc(0.0, 0.0);
  for (i64 i = 0; i < n_ - 1; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(nt::mul_mod(c, i, n_)) / n_;
    acc += coeffs_[static_cast<std::size_t>(i)].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

double CycInt::max_abs() const {
  double best = 0.0;
  for (i64 c = 1; c < n_; ++c) best = std::max(best, std::abs(embed(c)));
  return best;
}

CycInt CycInt::operator-() const {
  CycInt out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  require_same_conductor(n_, o.n_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  require_same_conductor(n_, o.n_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  *this = *this * o;
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  require_same_conductor(a.n_, b.n_);
  const int n = a.n_;
  const auto len = static_cast<std::size_t>(n - 1);
  // Cyclic convolution modulo x^n - 1, then fold zeta^{n-1}.
  std::vector<mpz_class> full(static_cast<std::size_t>(n), mpz_class(0));
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < len; ++j) {
      if (b.coeffs_[j] == 0) continue;
      auto& slot = full[(i + j) % static_cast<std::size_t>(n)];
      mpz_addmul(slot.get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return CycInt(n, std::move(full));
}

CycInt operator*(const mpz_class& k, const CycInt& a) {
  CycInt out(a);
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const mpz_class mag = abs(c);
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycInt conjugate_product(const CycInt& a) {
  const int n = a.conductor();
  CycInt acc = CycInt::from_integer(n, 1);
  for (i64 c = 2; c < n; ++c) acc *= a.galois(c);
  return acc;
}

mpz_class cyc_norm(const CycInt& a) {
  const CycInt full = a * conjugate_product(a);
  if (!full.is_rational()) throw InvariantViolation("cyc_norm: product of conjugates not rational");
  return full.constant_term();
}

std::optional<CycInt> divide_exact(const CycInt& a, const CycInt& b) {
  if (b.is_zero()) throw PreconditionError("divide_exact: division by zero");
  const CycInt conj = conjugate_product(b);
  const CycInt full = b * conj;
  if (!full.is_rational()) throw InvariantViolation("divide_exact: norm not rational");
  const CycInt scaled = a * conj;
  if (!scaled.divisible_by(full.constant_term())) return std::nullopt;
  return scaled.divided_by(full.constant_term());
}

CycInt divide_by_lambda(const CycInt& a) {
  const int n = a.conductor();
  mpz_class sum = 0;
  for (const auto& c : a.coefficients()) sum += c;
  if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n))) {
    throw InvariantViolation("divide_by_lambda: element not divisible by 1 - zeta");
  }
  // Subtract t * Phi_n (Phi_n(1) = n) so the polynomial vanishes at 1, then
  // divide by (1 - x): q_i = b_0 + ... + b_i.
  const mpz_class t = sum / n;
  std::vector<mpz_class> q(static_cast<std::size_t>(n - 1));
  mpz_class running = 0;
  for (int i = 0; i < n - 1; ++i) {
    running += a.coefficients()[static_cast<std::size_t>(i)] - t;
    q[static_cast<std::size_t>(i)] = running;
  }
  return CycInt(n, std::move(q));
}

CycRat::CycRat(CycInt num) : num_(std::move(num)), den_(1) {}

CycRat::CycRat(CycInt num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw PreconditionError("CycRat: zero denominator");
  normalize();
}

void CycRat::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    num_ = num_.divided_by(g);
    den_ /= g;
  }
}

CycInt CycRat::to_integral() const {
  if (!is_integral()) throw InvariantViolation("CycRat::to_integral: element is not integral");
  return num_;
}

CycRat CycRat::inverse() const {
  if (num_.is_zero()) throw PreconditionError("CycRat::inverse: zero element");
  const CycInt conj = conjugate_product(num_);
  const CycInt full = num_ * conj;
  if (!full.is_rational()) throw InvariantViolation("CycRat::inverse: norm not rational");
  return CycRat(den_ * conj, full.constant_term());
}

CycRat operator+(const CycRat& a, const CycRat& b) {
  return CycRat(b.den_ * a.num_ + a.den_ * b.num_, a.den_ * b.den_);
}

CycRat operator-(const CycRat& a, const CycRat& b) {
  return CycRat(b.den_ * a.num_ - a.den_ * b.num_, a.den_ * b.den_);
}

CycRat operator*(const CycRat& a, const CycRat& b) {
  return CycRat(a.num_ * b.num_, a.den_ * b.den_);
}

CycRat operator*(const mpq_class& k, const CycRat& a) {
  return CycRat(k.get_num() * a.num_, k.get_den() * a.den_);
}

std::string CycRat::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.get_str();
}

CycRat inverse_lambda(int n) {
  require_odd_prime(n);
  std::vector<mpz_class> full(static_cast<std::size_t>(n), mpz_class(0));
  for (int k = 1; k < n; ++k) full[static_cast<std::size_t>(k)] = -k;
  return CycRat(CycInt(n, std::move(full)), mpz_class(n));
}

CycInt galois_pow(const CycInt& a, const GroupRingElement& theta) {
  const int n = a.conductor();
  if (theta.modulus() != n) throw PreconditionError("galois_pow: modulus mismatch");
  if (!theta.is_positive()) {
    throw PreconditionError("galois_pow: exponent has negative coefficients; lift it first");
  }
  CycInt acc = CycInt::from_integer(n, 1);
  for (i64 c = 1; c < n; ++c) {
    const auto e = theta.coefficients()[static_cast<std::size_t>(c - 1)];
    if (e == 0) continue;
    acc *= a.galois(c).pow(static_cast<std::uint64_t>(e));
  }
  return acc;
}

LambdaExpansion lambda_expand(const CycInt& a, std::size_t max_len) {
  if (max_len < 1) throw PreconditionError("lambda_expand: max_len must be >= 1");
  const int n = a.conductor();
  LambdaExpansion out;
  CycInt rest = a;
  do {
    if (out.digits.size() == max_len) {
      throw ResourceBoundError("lambda_expand: expansion exceeds bound of " +
                               std::to_string(max_len) + " digits");
    }
    const i64 digit = nt::centered(rest.mod_lambda(), n);
    out.digits.push_back(digit);
    rest = divide_by_lambda(rest - CycInt::from_integer(n, digit));
  } while (!rest.is_zero());
  return out;
}

CycInt lambda_reconstruct(int n, std::span<const std::int64_t> digits) {
  const CycInt lam = CycInt::lambda(n);
  CycInt acc(n);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc = acc * lam + CycInt::from_integer(n, *it);
  }
  return acc;
}

CycInt rho(const GroupRingElement& theta) {
  const int n = theta.modulus();
  // (1 - zeta)/(1 - zeta^c) = 1 + zeta^c + ... + zeta^{c(d-1)} with d = 1/c mod n.
  std::vector<mpz_class> full(static_cast<std::size_t>(n), mpz_class(0));
  for (i64 c = 1; c < n; ++c) {
    const auto nc = theta.coefficients()[static_cast<std::size_t>(c - 1)];
    if (nc == 0) continue;
    const i64 d = nt::inv_mod(c, n);
    for (i64 i = 0; i < d; ++i) full[static_cast<std::size_t>(nt::mul_mod(c, i, n))] += nc;
  }
  return CycInt(n, std::move(full));
}

CycRat rho0(const GroupRingElement& theta) {
  return CycRat(rho(theta)) * inverse_lambda(theta.modulus());
}

}  // namespace cyclothue
