#pragma once

// Residue fields Z[zeta_n]/P = F_p[x]/(g) for the prime ideals P above a
// rational prime p != n, where g runs over the monic irreducible factors of
// Phi_n modulo p and zeta maps to the class of x.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cyclothue/cyclotomic.hpp"

namespace cyclothue {

// Dense polynomial over F_p, constant term first, no trailing zeros.
using FpPoly = std::vector<std::int64_t>;

class ResidueField;

class ResidueFieldElem {
 public:
  ResidueFieldElem() = default;

  const FpPoly& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const ResidueFieldElem&, const ResidueFieldElem&) = default;

  std::string to_string() const;

 private:
  friend class ResidueField;
  explicit ResidueFieldElem(FpPoly c) : coeffs_(std::move(c)) {}
  FpPoly coeffs_;
};

class ResidueField {
 public:
  ResidueField(std::int64_t p, int n, FpPoly modulus);

  std::int64_t characteristic() const { return p_; }
  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(g_.size()) - 1; }
  const FpPoly& modulus() const { return g_; }

  ResidueFieldElem from_integer(const mpz_class& v) const;
  // Class of an arbitrary polynomial (coefficients reduced mod p, then mod g).
  ResidueFieldElem from_polynomial(FpPoly c) const { return make(std::move(c)); }
  // The image of zeta, i.e. the class of x.
  ResidueFieldElem zeta() const;
  ResidueFieldElem add(const ResidueFieldElem& a, const ResidueFieldElem& b) const;
  ResidueFieldElem sub(const ResidueFieldElem& a, const ResidueFieldElem& b) const;
  ResidueFieldElem mul(const ResidueFieldElem& a, const ResidueFieldElem& b) const;
  ResidueFieldElem pow(const ResidueFieldElem& a, const mpz_class& e) const;

  std::string to_string() const;

 private:
  ResidueFieldElem make(FpPoly c) const;

  std::int64_t p_;
  int n_;
  FpPoly g_;
};

// All prime ideals above p, as residue fields ordered lexicographically by
// the coefficient vector of g (constant term first). Throws PreconditionError
// when p is not prime or p == n.
std::vector<ResidueField> prime_ideals_above(std::int64_t p, int n);

// The ring homomorphism Z[zeta] -> F_p[x]/(g), zeta -> x.
ResidueFieldElem residue_reduce(const CycInt& a, const ResidueField& field);

}  // namespace cyclothue
