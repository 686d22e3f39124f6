#pragma once

// The n-th-power form of the residue congruence for Jacobi integers at a
// solution of the diagonal equation (X^n - 1)/(X - 1) = n^e Y^n.

#include <cstdint>

#include "cyclothue/groupring.hpp"

namespace cyclothue {

// True iff (zeta^{c_X} alpha)^{2 theta0} = Y^{s n} in every residue field
// above p, where alpha = (X - zeta)/(1 - zeta)^e and s = s(theta0).
// theta0 must be a positive element of I_f; p must be a prime dividing X - 1
// and coprime to nY.
bool lemma_theta_verify(std::int64_t X, std::int64_t Y, int n, const GroupRingElement& theta0,
                        std::int64_t p);

}  // namespace cyclothue
