#pragma once

#include <map>
#include <span>

#include "qprofile/symfunc.hpp"

namespace qprofile {

/// Modified Hall-Littlewood polynomial: Schur coefficients are modified
/// Kostka-Foulkes polynomials.
SymFunc modified_hl(const Partition& lambda);

/// Transformed Hall-Littlewood polynomial, the Hall-dual of P: Schur
/// coefficients are Kostka-Foulkes polynomials.
SymFunc transformed_hl(const Partition& lambda);

/// Hall-Littlewood P, obtained by inverting the unitriangular relation
/// s = K(t) P at the degree of lambda.
SymFunc hl_p(const Partition& lambda);

/// q-Whittaker function W_lambda, Schur-positive with conjugated
/// Kostka-Foulkes coefficients.
SymFunc q_whittaker(const Partition& lambda);

/// Dual q-Whittaker function: omega applied to P at the conjugate index.
SymFunc dual_q_whittaker(const Partition& lambda);

/// Plethysm by a power sum: every indeterminate of f, including the
/// parameter t, is raised to the d-th power. In power-sum coordinates
/// p_r -> p_{dr} and coefficients c(t) -> c(t^d). Degree multiplies by d.
SymFunc plethysm_pd(int d, const SymFunc& f);

/// Alphabet substitution X -> X(1-t): p_r -> (1 - t^r) p_r, the parameter t
/// in coefficients untouched.
SymFunc pleth_times_onem(const SymFunc& f);

/// Alphabet substitution X -> X/(1-t): p_r -> p_r / (1 - t^r). Inverse of
/// pleth_times_onem.
SymFunc pleth_over_onem(const SymFunc& f);

/// Pieri coefficient psi_{eta/mu}(t) = prod_i [eta_i - eta_{i+1} over
/// eta_i - mu_i]_t; zero unless eta/mu is a horizontal strip; equals
/// delta_{eta,mu} when |mu| = |eta|.
PolyT pieri_psi(const Partition& eta, const Partition& mu);

/// Variant with an arbitrary integer tuple in place of mu (used for partial
/// profiles, where the lower row need not be a partition).
PolyT pieri_psi(const Partition& eta, std::span<const int> row);

/// Strip weight theta_{mu/rho}(t) = [|mu|-|rho|]_t! / [mu_1-rho_1]_t! *
/// prod_i [rho_i - rho_{i+1} over mu_{i+1} - rho_{i+1}]_t; zero unless
/// mu/rho is a horizontal strip. Always reduces to a polynomial.
RatFunc strip_theta(const Partition& mu, const Partition& rho);

/// Basis element for any of the ten supported bases.
SymFunc basis_element(BasisId tag, const Partition& lambda);

/// Coefficient map of f in any of the ten supported bases.
std::map<Partition, RatFunc> expand_in(const SymFunc& f, BasisId tag);

}  // namespace qprofile
