#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "qprofile/partition.hpp"

namespace qprofile {

// Arbitrary-precision rational, always canonical (positive denominator,
// coprime). GMP's mpq_class already maintains exactly that through its
// arithmetic operators.
using BigQ = mpq_class;

bool is_integer(const BigQ& q);
std::string bigq_to_string(const BigQ& q);
BigQ bigq_from_string(const std::string& s);
inline BigQ to_bigq(long long v) { return BigQ(static_cast<long>(v)); }

class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Univariate polynomial in t over BigQ, coefficients stored in ascending
/// powers. The zero polynomial has an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
class PolyT {
public:
  PolyT() = default;
  explicit PolyT(const BigQ& constant);
  explicit PolyT(long constant);
  explicit PolyT(std::vector<BigQ> coeffs);

  static PolyT zero() { return PolyT(); }
  static PolyT one() { return PolyT(1); }
  /// c * t^k
  static PolyT monomial(int k, const BigQ& c = BigQ(1));

  const std::vector<BigQ>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigQ coeff(int k) const;
  BigQ leading() const;
  bool has_integer_coeffs() const;
  bool has_nonnegative_coeffs() const;

  PolyT operator-() const;
  PolyT& operator+=(const PolyT& o);
  PolyT& operator-=(const PolyT& o);
  friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
  friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }
  friend PolyT operator*(const PolyT& a, const PolyT& b);
  PolyT& operator*=(const PolyT& o) { return *this = *this * o; }
  bool operator==(const PolyT&) const = default;

  PolyT scaled(const BigQ& c) const;
  PolyT shifted(int k) const;  // * t^k, k >= 0
  PolyT monic() const;
  PolyT pow(int e) const;  // e >= 0
  PolyT subst_power(int d) const;  // t -> t^d, d >= 1
  BigQ eval(const BigQ& x) const;

  /// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
  static void divmod(const PolyT& a, const PolyT& b, PolyT& q, PolyT& r);
  /// Exact quotient; throws std::logic_error if the division has a remainder.
  static PolyT div_exact(const PolyT& a, const PolyT& b);
  /// Monic gcd computed by the primitive-part pseudo-remainder sequence.
  static PolyT gcd(const PolyT& a, const PolyT& b);

  std::string to_string() const;  // e.g. "1 + t + 2*t^2"

private:
  void trim();
  std::vector<BigQ> coeffs_;
};

/// Reduced rational function num/den in t: den nonzero and monic,
/// gcd(num, den) = 1. Negative powers of t are plain denominators t^k.
class RatFunc {
public:
  RatFunc() = default;  // zero
  explicit RatFunc(const BigQ& constant);
  explicit RatFunc(long constant);
  RatFunc(const PolyT& num);  // implicit-ish promotion of polynomials
  RatFunc(PolyT num, PolyT den);

  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(1); }
  /// t^k for any integer k, negative exponents allowed.
  static RatFunc t_power(long k);

  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Throws std::logic_error unless den = 1.
  const PolyT& as_poly() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc&) const = default;

  RatFunc pow(int e) const;  // any integer e
  RatFunc subst_power(int d) const;   // f(t^d)
  RatFunc subst_invert() const;       // f(1/t)
  /// Exact evaluation; throws PoleError when the denominator vanishes.
  BigQ eval_at(const BigQ& x) const;

  std::string to_string() const;

private:
  void normalize();
  PolyT num_;
  PolyT den_ = PolyT::one();
};

/// [n]_t = 1 + t + ... + t^(n-1). n >= 0.
PolyT q_int(int n);
/// [n]_t! = [1]_t [2]_t ... [n]_t.
PolyT q_factorial(int n);
/// Gaussian binomial; zero polynomial when k > n; throws on negative input.
PolyT q_binomial(int n, int k);
/// [n over alpha]_t = [n]_t! / prod [alpha_i]_t!, always a polynomial.
RatFunc q_multinomial(int n, const WeakComposition& alpha);

}  // namespace qprofile
