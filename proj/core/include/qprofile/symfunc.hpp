#pragma once

#include <functional>
#include <map>
#include <string>

#include "qprofile/partition.hpp"
#include "qprofile/ratfunc.hpp"

namespace qprofile {

enum class BasisId { m, e, h, p, s, P, H, Hmod, W, Wdual };

BasisId basis_from_string(const std::string& tag);
std::string basis_to_string(BasisId tag);

/// Homogeneous symmetric function of a fixed degree over Q(t), stored as a
/// zero-free coefficient map in the Schur basis. Immutable value semantics;
/// every key is a partition of degree().
class SymFunc {
public:
  explicit SymFunc(int degree) : degree_(degree) {}

  static SymFunc zero(int degree) { return SymFunc(degree); }
  /// The unit of the algebra: degree 0, coefficient 1 on the empty partition.
  static SymFunc unit();

  int degree() const { return degree_; }
  const std::map<Partition, RatFunc>& schur_coeffs() const { return coeffs_; }
  RatFunc schur_coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(const Partition& lambda, const RatFunc& c);

  friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
  SymFunc operator-() const;
  friend SymFunc operator*(const RatFunc& c, const SymFunc& f);
  bool operator==(const SymFunc&) const = default;

  std::string to_string() const;

private:
  int degree_;
  std::map<Partition, RatFunc> coeffs_;
};

/// Classical basis element (m, e, h, p or s) expressed in Schur coordinates.
/// The five one-parameter bases live in hlwhittaker.
SymFunc from_basis(BasisId tag, const Partition& lambda);

/// Coefficient map of f in a classical basis.
std::map<Partition, RatFunc> to_basis(const SymFunc& f, BasisId tag);

/// Product, computed through the power-sum basis. Throws when the result
/// degree exceeds kDegreeCap.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// Hall scalar product; Schur functions are orthonormal. Zero when the
/// degrees differ.
RatFunc hall_inner(const SymFunc& f, const SymFunc& g);

/// The omega involution: relabels every Schur index by its conjugate.
SymFunc omega(const SymFunc& f);

/// Apply fn to every coefficient (e.g. t -> 1/t or t -> t^d).
SymFunc map_coeffs(const SymFunc& f, const std::function<RatFunc(const RatFunc&)>& fn);

/// Specialize the parameter t to a rational value.
SymFunc specialize_t(const SymFunc& f, const BigQ& value);

}  // namespace qprofile
