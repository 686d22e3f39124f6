#pragma once

// Integer group ring Z[G] for G = Gal(Q(zeta_n)/Q) = (Z/nZ)^*, n an odd prime.
//
// An element sum_c n_c sigma_c is stored densely: coefficient of sigma_c at
// index c - 1, for c = 1 .. n-1. Complex conjugation is sigma_{n-1}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyclothue {

class GroupRingElement {
 public:
  // Zero element of Z[G] for the prime n.
  explicit GroupRingElement(int n);
  // coeffs[c-1] is the coefficient of sigma_c; size must be n - 1.
  GroupRingElement(int n, std::vector<std::int64_t> coeffs);

  static GroupRingElement sigma(int n, std::int64_t a);
  static GroupRingElement one(int n) { return sigma(n, 1); }
  // N = sum_c sigma_c.
  static GroupRingElement norm_element(int n);

  int modulus() const { return n_; }
  std::int64_t coeff(std::int64_t c) const;
  std::span<const std::int64_t> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_positive() const;

  // j * theta, i.e. sigma_{-1} theta.
  GroupRingElement conjugate() const;
  // sigma_a * theta.
  GroupRingElement act(std::int64_t a) const;

  GroupRingElement operator-() const;
  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(std::int64_t k, const GroupRingElement& a);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) = default;

  std::string to_string() const;

 private:
  int n_;
  std::vector<std::int64_t> coeffs_;
};

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b);

// Representative with every coefficient in [0, n): the positive lift of the
// image of theta in F_n[G].
GroupRingElement lift(const GroupRingElement& theta);

struct MomentValue {
  int index;
  std::int64_t value;  // in [0, n)

  friend bool operator==(const MomentValue&, const MomentValue&) = default;
};

// phi^(i)(theta) = sum_c n_c c^i mod n; negative i uses modular inverses.
MomentValue moment(const GroupRingElement& theta, int i);

// Shorthand for moment(theta, 1).value, the Fermat quotient map.
std::int64_t fermat_map(const GroupRingElement& theta);

struct Weights {
  std::int64_t augmentation;                   // sum n_c
  std::optional<std::int64_t> relative_weight;  // s with theta + j theta = s N
  std::int64_t absolute_weight;                 // sum |n_c|
};

Weights weights(const GroupRingElement& theta);

// Throws PreconditionError unless n is an odd prime.
void require_odd_prime(int n);

}  // namespace cyclothue
