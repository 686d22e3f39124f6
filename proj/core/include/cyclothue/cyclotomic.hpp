#pragma once

// Exact arithmetic in Z[zeta_n] and Q(zeta_n) for an odd prime n.
//
// Elements are stored in the power basis 1, zeta, ..., zeta^{n-2}; every
// result is reduced with zeta^{n-1} = -(1 + zeta + ... + zeta^{n-2}), so two
// elements are equal iff their coefficient vectors are.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclothue/groupring.hpp"

namespace cyclothue {

class CycInt {
 public:
  explicit CycInt(int n);
  // Accepts n-1 power-basis coefficients, or n coefficients (1..zeta^{n-1})
  // which are reduced.
  CycInt(int n, std::vector<mpz_class> coeffs);

  static CycInt from_integer(int n, const mpz_class& value);
  static CycInt zeta_power(int n, std::int64_t k);
  // lambda = 1 - zeta
  static CycInt lambda(int n);

  int conductor() const { return n_; }
  std::span<const mpz_class> coefficients() const { return coeffs_; }

  bool is_zero() const;
  // True when the element lies in Z (all non-constant coefficients vanish).
  bool is_rational() const;
  const mpz_class& constant_term() const { return coeffs_[0]; }

  // sigma_a: zeta -> zeta^a.
  CycInt galois(std::int64_t a) const;
  CycInt pow(std::uint64_t e) const;

  mpz_class content() const;
  bool divisible_by(const mpz_class& d) const;
  // Exact division by a rational integer; throws InvariantViolation if the
  // division is not exact.
  CycInt divided_by(const mpz_class& d) const;

  // Image in Z[zeta]/(lambda) = F_n, i.e. the coefficient sum mod n.
  std::int64_t mod_lambda() const;

  // Value under the complex embedding zeta -> exp(2 pi i c / n).
  std::complex<double> embed(std::int64_t c) const;
  // Largest absolute value over all complex embeddings.
  double max_abs() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const mpz_class& k, const CycInt& a);
  friend bool operator==(const CycInt& a, const CycInt& b) = default;

  std::string to_string() const;

 private:
  int n_;
  std::vector<mpz_class> coeffs_;
};

// Product of all Galois conjugates; an exact rational integer.
mpz_class cyc_norm(const CycInt& a);

// prod_{c = 2}^{n-1} sigma_c(a), so that a * conjugate_product(a) = N(a).
CycInt conjugate_product(const CycInt& a);

// a / b when the quotient lies in Z[zeta], otherwise nullopt.
std::optional<CycInt> divide_exact(const CycInt& a, const CycInt& b);

// a / (1 - zeta); throws InvariantViolation unless lambda divides a.
CycInt divide_by_lambda(const CycInt& a);

// An element of Q(zeta_n) as numerator / positive integer denominator, with
// gcd(content(numerator), denominator) = 1.
class CycRat {
 public:
  explicit CycRat(int n) : num_(n), den_(1) {}
  CycRat(CycInt num);  // NOLINT(google-explicit-constructor)
  CycRat(CycInt num, mpz_class den);

  int conductor() const { return num_.conductor(); }
  const CycInt& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  CycInt to_integral() const;

  CycRat galois(std::int64_t a) const { return CycRat(num_.galois(a), den_); }
  CycRat inverse() const;

  CycRat operator-() const { return CycRat(-num_, den_); }
  friend CycRat operator+(const CycRat& a, const CycRat& b);
  friend CycRat operator-(const CycRat& a, const CycRat& b);
  friend CycRat operator*(const CycRat& a, const CycRat& b);
  friend CycRat operator*(const mpq_class& k, const CycRat& a);
  friend bool operator==(const CycRat& a, const CycRat& b) = default;

  std::string to_string() const;

 private:
  void normalize();

  CycInt num_;
  mpz_class den_;
};

// 1 / (1 - zeta) = -(1/n) sum_{k=1}^{n-1} k zeta^k.
CycRat inverse_lambda(int n);

// a^theta = prod_c sigma_c(a)^{n_c}. theta must be positive; lift first for
// elements given modulo n.
CycInt galois_pow(const CycInt& a, const GroupRingElement& theta);

struct LambdaExpansion {
  std::vector<std::int64_t> digits;  // a = sum_j digits[j] (1 - zeta)^j
};

// Balanced lambda-adic digits in [-(n-1)/2, (n-1)/2]. Throws
// ResourceBoundError when more than max_len digits would be needed.
LambdaExpansion lambda_expand(const CycInt& a, std::size_t max_len);
CycInt lambda_reconstruct(int n, std::span<const std::int64_t> digits);

// rho_0(theta) = sum_c n_c / (1 - zeta^c), rho(theta) = (1 - zeta) rho_0(theta).
CycRat rho0(const GroupRingElement& theta);
CycInt rho(const GroupRingElement& theta);

}  // namespace cyclothue
