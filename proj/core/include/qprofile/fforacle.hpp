#pragma once

#include <vector>

#include "qprofile/partition.hpp"
#include "qprofile/ratfunc.hpp"
#include "qprofile/similarity_type.hpp"

namespace qprofile {

/// Square matrix over a prime field, entries reduced mod p. p is checked for
/// primality on construction.
class FpMatrix {
public:
  FpMatrix(long long p, int n);  // zero matrix
  FpMatrix(long long p, int n, std::vector<std::vector<long long>> entries);

  static FpMatrix identity(long long p, int n);
  static FpMatrix scalar(long long p, int n, long long c);

  long long p() const { return p_; }
  int n() const { return n_; }
  long long at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, long long v);

  bool operator==(const FpMatrix&) const = default;

private:
  long long p_;
  int n_;
  std::vector<long long> e_;
};

/// Subspace of F_p^n in its canonical form: the reduced row-echelon basis.
class Subspace {
public:
  Subspace(long long p, int n, std::vector<std::vector<long long>> rows);

  static Subspace zero(long long p, int n);
  static Subspace full(long long p, int n);

  long long p() const { return p_; }
  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<long long>>& basis() const { return basis_; }

  bool operator==(const Subspace&) const = default;
  auto operator<=>(const Subspace&) const = default;

private:
  long long p_;
  int n_;
  std::vector<std::vector<long long>> basis_;  // canonical RREF, no zero rows
};

/// Row space of the given vectors as a canonical subspace.
Subspace row_space(long long p, int n, const std::vector<std::vector<long long>>& rows);

Subspace sum_spaces(const Subspace& u, const Subspace& v);

/// Image of w under the operator: row space of W * Delta^T.
Subspace apply(const FpMatrix& delta, const Subspace& w);

bool subspace_contains(const Subspace& big, const Subspace& small);

/// Total number of subspaces of F_p^n (all dimensions), exact.
BigQ subspace_count(long long p, int n);

/// Every subspace of F_p^n exactly once, via canonical RREF enumeration.
/// Throws BudgetError when the total count exceeds kSubspaceBudget.
std::vector<Subspace> all_subspaces(long long p, int n);
std::vector<Subspace> all_subspaces(long long p, int n, int dim);

/// Successive dimension increments of W, W + DW, W + DW + D^2 W, ... until
/// stabilization. Always weakly decreasing.
Partition profile_of(const Subspace& w, const FpMatrix& delta);

/// Number of subspaces with the given profile, by exhaustion.
long long sigma_bruteforce(const Partition& mu, const FpMatrix& delta);

/// Number of invariant flags with dimension jumps alpha (|alpha| = n), by
/// dynamic programming over the invariant-subspace lattice.
long long flag_count_bruteforce(const WeakComposition& alpha, const FpMatrix& delta);

/// Number of subspaces whose first r profile increments equal rho.
long long partial_profile_bruteforce(const ProfileTuple& rho, const FpMatrix& delta);

/// Number of m-dimensional subspaces W with dim(W + DW + ... + D^fold W) =
/// (fold+1) m.
long long anti_invariant_bruteforce(int m, int fold, const FpMatrix& delta);

/// Probability that k uniform vectors generate F_p^n with operator
/// polynomials of degree < ell, exact. Subspaces are enumerated once and
/// weighted by the number of k-tuples spanning them.
BigQ krylov_bruteforce(int k, int ell, const FpMatrix& delta);

/// A block-diagonal matrix of companion blocks realizing the type over F_p.
/// Throws std::invalid_argument naming the deficient degree when no matrix
/// of this type exists over F_p.
FpMatrix build_matrix_of_type(const SimilarityType& tau, long long p);

}  // namespace qprofile
