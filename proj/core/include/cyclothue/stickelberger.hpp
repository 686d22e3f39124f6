#pragma once

// Elements of the Stickelberger module I = (theta Z[G]) ∩ Z[G]: the Fuchsian
// and Fueter generators, membership tests, the Voronoi congruences and the
// search for positive elements with prescribed first and minus-first moments.

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclothue/groupring.hpp"

namespace cyclothue {

// n * theta = sum_c c * sigma_c^{-1}. Coincides with fuchsian(n, n).
GroupRingElement stickelberger_scaled(int n);

// Theta_k = sum_c floor(k c / n) sigma_c^{-1}, 2 <= k <= n.
GroupRingElement fuchsian(int n, int k);

// psi_k = sum_c (floor((k+1)c/n) - floor(kc/n)) sigma_c^{-1}, 1 <= k <= n-1.
// psi_1 = Theta_2, psi_k = Theta_{k+1} - Theta_k, and psi_{n-1} is the norm.
GroupRingElement fueter(int n, int k);

// Integer coordinates of theta over the Z-basis psi_1, ..., psi_{(n-1)/2}, N
// of I, or nullopt when theta is not in I.
std::optional<std::vector<std::int64_t>> fueter_coordinates(const GroupRingElement& theta);

bool in_stickelberger_module(const GroupRingElement& theta);

// True iff theta lies in the Fermat module I_f, i.e. phi(theta) = 0 mod n.
// Throws PreconditionError when theta is not in I.
bool is_fermat_module(const GroupRingElement& theta);

// Positive elements of I_f with relative weight s, in increasing
// lexicographic order of their coefficient vectors.
std::vector<GroupRingElement> positive_fermat_elements(int n, std::int64_t relative_weight);

struct VoronoiCheck {
  enum class Status { holds, fails, skipped };
  Status status = Status::skipped;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

// a^m sum_j floor(aj/n) j^{m-1} = (a^{m+1} - a) B_m / m mod n, with B_m from
// bernoulli_mod_p. m = n-1 is reported as skipped (B_{n-1} is not n-integral).
VoronoiCheck voronoi_check(int n, std::int64_t a, int m);

// The m = n-1 form: sum_j floor(aj/n) j^{n-2} = (a^n - a)/n mod n.
VoronoiCheck voronoi_fermat_check(int n, std::int64_t a);

struct SimpleTheta {
  enum class Path { closed_form, exhaustive };
  GroupRingElement theta;  // sigma_w psi_u + sigma_z psi_v
  int u = 0;
  int v = 0;
  int w = 0;
  int z = 0;
  Path path = Path::closed_form;
};

// Positive theta of relative weight 2 with phi^(1)(theta) = 0 and
// phi^(-1)(theta) != 0, built from two Fueter elements psi_u, psi_v
// (1 <= u, v <= n-2). Tries the 2x2 moment system first (skipped for
// n = 7), then exhaustive search in lexicographic (u, v, w, z) order.
std::optional<SimpleTheta> lemma_simple_search(int n);

struct ProofTheta {
  GroupRingElement theta;  // 2 mu theta_0
  std::int64_t h = 0;      // 2 w(mu)
};

ProofTheta theta_for_proof(const GroupRingElement& mu, const GroupRingElement& theta0);

}  // namespace cyclothue
