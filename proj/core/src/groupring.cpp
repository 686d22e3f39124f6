#include "cyclothue/groupring.hpp"

#include <cstdlib>
#include <sstream>

#include "cyclothue/errors.hpp"
#include "cyclothue/numtheory.hpp"

namespace cyclothue {

void require_odd_prime(int n) {
  if (n < 3 || !nt::is_prime(static_cast<nt::u64>(n))) {
    throw PreconditionError("modulus must be an odd prime, got " + std::to_string(n));
  }
}

namespace {

void require_same_modulus(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus()) {
    throw PreconditionError("group ring modulus mismatch: " + std::to_string(a.modulus()) +
                            " vs " + std::to_string(b.modulus()));
  }
}

}  // namespace

GroupRingElement::GroupRingElement(int n) : n_(n) {
  require_odd_prime(n);
  coeffs_.assign(static_cast<std::size_t>(n - 1), 0);
}

GroupRingElement::GroupRingElement(int n, std::vector<std::int64_t> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  require_odd_prime(n);
  if (coeffs_.size() != static_cast<std::size_t>(n - 1)) {
    throw PreconditionError("group ring element needs n-1 coefficients");
  }
}

GroupRingElement GroupRingElement::sigma(int n, std::int64_t a) {
  GroupRingElement out(n);
  const auto c = nt::mod(a, n);
  if (c == 0) throw PreconditionError("sigma_a requires gcd(a, n) = 1");
  out.coeffs_[static_cast<std::size_t>(c - 1)] = 1;
  return out;
}

GroupRingElement GroupRingElement::norm_element(int n) {
  return GroupRingElement(n, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 1));
}

std::int64_t GroupRingElement::coeff(std::int64_t c) const {
  const auto r = nt::mod(c, n_);
  if (r == 0) throw PreconditionError("coefficient index must be a unit mod n");
  return coeffs_[static_cast<std::size_t>(r - 1)];
}

bool GroupRingElement::is_zero() const {
  for (auto v : coeffs_) {
    if (v != 0) return false;
  }
  return true;
}

bool GroupRingElement::is_positive() const {
  for (auto v : coeffs_) {
    if (v < 0) return false;
  }
  return true;
}

GroupRingElement GroupRingElement::conjugate() const { return act(n_ - 1); }

GroupRingElement GroupRingElement::act(std::int64_t a) const {
  const auto s = nt::mod(a, n_);
  if (s == 0) throw PreconditionError("sigma_a requires gcd(a, n) = 1");
  GroupRingElement out(n_);
  for (std::int64_t c = 1; c < n_; ++c) {
    const auto target = nt::mul_mod(s, c, n_);
    out.coeffs_[static_cast<std::size_t>(target - 1)] = coeffs_[static_cast<std::size_t>(c - 1)];
  }
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out(*this);
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_modulus(a, b);
  GroupRingElement out(a);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_modulus(a, b);
  GroupRingElement out(a);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_modulus(a, b);
  const int n = a.n_;
  GroupRingElement out(n);
  for (std::int64_t x = 1; x < n; ++x) {
    const auto ax = a.coeffs_[static_cast<std::size_t>(x - 1)];
    if (ax == 0) continue;
    for (std::int64_t y = 1; y < n; ++y) {
      const auto by = b.coeffs_[static_cast<std::size_t>(y - 1)];
      if (by == 0) continue;
      out.coeffs_[static_cast<std::size_t>(nt::mul_mod(x, y, n) - 1)] += ax * by;
    }
  }
  return out;
}

GroupRingElement operator*(std::int64_t k, const GroupRingElement& a) {
  GroupRingElement out(a);
  for (auto& v : out.coeffs_) v *= k;
  return out;
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int c = 1; c < n_; ++c) {
    const auto v = coeffs_[static_cast<std::size_t>(c - 1)];
    if (v == 0) continue;
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    const auto mag = std::llabs(v);
    if (mag != 1) os << mag << "*";
    os << "s" << c;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b) { return a + b; }
GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

GroupRingElement lift(const GroupRingElement& theta) {
  const int n = theta.modulus();
  std::vector<std::int64_t> coeffs(theta.coefficients().begin(), theta.coefficients().end());
  for (auto& v : coeffs) v = nt::mod(v, n);
  return GroupRingElement(n, std::move(coeffs));
}

MomentValue moment(const GroupRingElement& theta, int i) {
  const int n = theta.modulus();
  std::int64_t acc = 0;
  const auto e = static_cast<nt::u64>(i < 0 ? -static_cast<std::int64_t>(i) : i);
  for (std::int64_t c = 1; c < n; ++c) {
    const auto v = theta.coefficients()[static_cast<std::size_t>(c - 1)];
    if (v == 0) continue;
    const auto base = i < 0 ? nt::inv_mod(c, n) : c;
    acc = nt::mod(acc + nt::mul_mod(v, nt::pow_mod(base, e, n), n), n);
  }
  return MomentValue{i, acc};
}

std::int64_t fermat_map(const GroupRingElement& theta) { return moment(theta, 1).value; }

Weights weights(const GroupRingElement& theta) {
  const int n = theta.modulus();
  Weights w{0, std::nullopt, 0};
  for (auto v : theta.coefficients()) {
    w.augmentation += v;
    w.absolute_weight += v < 0 ? -v : v;
  }
  const auto sym = theta + theta.conjugate();
  const auto s = sym.coefficients()[0];
  bool uniform = true;
  for (std::int64_t c = 1; c < n; ++c) {
    if (sym.coefficients()[static_cast<std::size_t>(c - 1)] != s) {
      uniform = false;
      break;
    }
  }
  if (uniform) w.relative_weight = s;
  return w;
}

}  // namespace cyclothue
