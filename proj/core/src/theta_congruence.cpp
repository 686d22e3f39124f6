#include "cyclothue/theta_congruence.hpp"

#include "cyclothue/cyclotomic.hpp"
#include "cyclothue/errors.hpp"
#include "cyclothue/numtheory.hpp"
#include "cyclothue/residue_field.hpp"
#include "cyclothue/stickelberger.hpp"

namespace cyclothue {

using nt::i64;

bool lemma_theta_verify(i64 X, i64 Y, int n, const GroupRingElement& theta0, i64 p) {
  require_odd_prime(n);
  if (theta0.modulus() != n) throw PreconditionError("lemma_theta_verify: modulus mismatch");
  if (!theta0.is_positive()) throw PreconditionError("lemma_theta_verify: theta0 must be positive");
  if (!in_stickelberger_module(theta0) || fermat_map(theta0) != 0) {
    throw PreconditionError("lemma_theta_verify: theta0 must lie in the Fermat module");
  }
  if (p < 2 || !nt::is_prime(static_cast<nt::u64>(p))) {
    throw PreconditionError("lemma_theta_verify: p must be prime");
  }
  if (nt::mod(X - 1, p) != 0) throw PreconditionError("lemma_theta_verify: p must divide X - 1");
  if (p == n || nt::mod(Y, p) == 0) throw PreconditionError("lemma_theta_verify: p must be coprime to nY");

  const auto s = weights(theta0).relative_weight;
  const bool e = nt::mod(X, n) == 1;
  const i64 c_x = e ? 0 : nt::inv_mod(X - 1, n);

  CycInt alpha = CycInt::from_integer(n, X) - CycInt::zeta_power(n, 1);
  if (e) alpha = divide_by_lambda(alpha);
  const CycInt base = CycInt::zeta_power(n, c_x) * alpha;

  mpz_class rhs_int;
  mpz_pow_ui(rhs_int.get_mpz_t(), mpz_class(Y).get_mpz_t(),
             static_cast<unsigned long>(s.value_or(0) * n));

  for (const auto& field : prime_ideals_above(p, n)) {
    ResidueFieldElem lhs = field.from_integer(1);
    for (i64 c = 1; c < n; ++c) {
      const auto nc = theta0.coeff(c);
      if (nc == 0) continue;
      const auto image = residue_reduce(base.galois(c), field);
      lhs = field.mul(lhs, field.pow(image, mpz_class(2 * nc)));
    }
    if (lhs != field.from_integer(rhs_int)) return false;
  }
  return true;
}

}  // namespace cyclothue
