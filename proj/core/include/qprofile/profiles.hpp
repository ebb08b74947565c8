#pragma once

#include "qprofile/hlwhittaker.hpp"
#include "qprofile/similarity_type.hpp"
#include "qprofile/symfunc.hpp"

namespace qprofile {

/// Invariant flag generating function of a similarity class type:
/// the product over blocks of p_d applied to the modified Hall-Littlewood
/// polynomial of the block shape. Cached per type.
SymFunc flag_gf(const SimilarityType& tau);

/// Number of invariant flags with dimension jumps lambda, as a polynomial in
/// t: the coefficient of m_lambda in flag_gf. Guaranteed to have
/// nonnegative integer coefficients.
PolyT x_coeff(const Partition& lambda, const SimilarityType& tau);

/// Number of subspaces with profile mu under an operator of type tau, as a
/// polynomial in t. Requires |mu| <= size(tau).
PolyT sigma(const Partition& mu, const SimilarityType& tau);

/// Closed-form product for the regular nilpotent type {(1,(n))}:
/// prod_{i>=2} t^{mu_i^2} [mu_{i-1} over mu_i]_t.
PolyT sigma_regnil(const Partition& mu, int n);

/// Closed-form product for the simple type {(n,(1))}:
/// (t^n - 1)/(t^{mu_1} - 1) * prod_{i>=2} t^{mu_i^2 - mu_i} [mu_{i-1} over
/// mu_i]_t, returned reduced. Defined as 1 for the empty profile.
RatFunc sigma_simple(const Partition& mu, int n);

/// b_{mu,nu}(t) by the horizontal-strip recurrence; nonnegative integer
/// coefficients, zero unless mu dominates nu. Memoized.
PolyT b_poly(const Partition& mu, const Partition& nu);

/// Profile counts for a diagonalizable operator of type nu (both partitions
/// of n): (t-1)^{sum_{j>=2} mu_j} t^{sum_{j>=2} C(mu_j,2)} b_{mu,nu}(t).
PolyT sigma_diagonal(const Partition& mu, const Partition& nu);

/// Transition coefficient a_{mu,lambda}(t) = sum_eta K_{eta',mu}
/// K_{eta,lambda}(t) (elementary into Hall-Littlewood P).
PolyT a_coeff(const Partition& mu, const Partition& lambda);

/// Inverse transition coefficients, obtained by exact inversion of the full
/// a-matrix over partitions of n.
RatFunc a_tilde(const Partition& mu, const Partition& lambda);

/// Independent route for full profiles |mu| = size(tau); must agree with
/// sigma.
PolyT sigma_full_via_atilde(const Partition& mu, const SimilarityType& tau);

/// Left-hand side of the linear relation sum_{|mu|<=n} (-1)^{mu_1}
/// t^{-mu.nu + C(mu_1,2)} sigma(mu,tau) for |nu| < size(tau). Identically
/// zero; returned so tests can verify that.
RatFunc bcrr_residual(const SimilarityType& tau, const Partition& nu);

/// The degree-n symmetric function pairing with omega(F) to count partial
/// profiles. Requires a nonempty tuple with a nonzero last entry and sum at
/// most n.
SymFunc g_partial(const ProfileTuple& rho, int n);

/// Number of subspaces whose first r profile increments match rho exactly.
PolyT pi_partial(const ProfileTuple& rho, const SimilarityType& tau);

/// Number of fold-fold anti-invariant subspaces of dimension m: subspaces
/// whose first fold+1 increments all equal m. Requires m*(fold+1) <= size.
PolyT anti_invariant_count(int m, int fold, const SimilarityType& tau);

/// Kernel of the Krylov spanning probability: pairing flag_gf(tau) with
/// this function gives the probability that k uniform vectors span F_t^n
/// with polynomial coefficients of degree < ell.
SymFunc krylov_g(int n, int k, int ell);

/// Exact spanning probability in Q(t); k, ell >= 1.
RatFunc krylov_prob(int k, int ell, const SimilarityType& tau);

/// Verifies the alternating psi-sum closed form for the pair (eta, nu) and,
/// when |nu| < |eta|, that the sum vanishes.
bool psisum_check(const Partition& eta, const Partition& nu);

/// Verifies det(t^{-mu.nu}) over the order ideal of partitions of size < n
/// is nonzero and matches the order-ideal product formula up to sign.
bool bcrr_determinant_check(int n);

}  // namespace qprofile
