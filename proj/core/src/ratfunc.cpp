#include "qprofile/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace qprofile {

bool is_integer(const BigQ& q) { return q.get_den() == 1; }

std::string bigq_to_string(const BigQ& q) { return q.get_str(); }

BigQ bigq_from_string(const std::string& s) {
  BigQ q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

PolyT::PolyT(const BigQ& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

PolyT::PolyT(long constant) : PolyT(BigQ(constant)) {}

PolyT::PolyT(std::vector<BigQ> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyT PolyT::monomial(int k, const BigQ& c) {
  if (k < 0) throw std::invalid_argument("PolyT::monomial: negative exponent");
  if (c == 0) return PolyT();
  std::vector<BigQ> v(k + 1, BigQ(0));
  v[k] = c;
  return PolyT(std::move(v));
}

void PolyT::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool PolyT::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

BigQ PolyT::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigQ(0);
  return coeffs_[k];
}

BigQ PolyT::leading() const {
  if (coeffs_.empty()) return BigQ(0);
  return coeffs_.back();
}

bool PolyT::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigQ& c) { return is_integer(c); });
}

bool PolyT::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigQ& c) { return c >= 0; });
}

PolyT PolyT::operator-() const {
  std::vector<BigQ> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return PolyT(std::move(v));
}

PolyT& PolyT::operator+=(const PolyT& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigQ(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

PolyT& PolyT::operator-=(const PolyT& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigQ(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

PolyT operator*(const PolyT& a, const PolyT& b) {
  if (a.is_zero() || b.is_zero()) return PolyT();
  std::vector<BigQ> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigQ(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PolyT(std::move(v));
}

PolyT PolyT::scaled(const BigQ& c) const {
  if (c == 0) return PolyT();
  std::vector<BigQ> v(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
  return PolyT(std::move(v));
}

PolyT PolyT::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("PolyT::shifted: negative shift");
  if (is_zero()) return PolyT();
  std::vector<BigQ> v(coeffs_.size() + k, BigQ(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
  return PolyT(std::move(v));
}

PolyT PolyT::monic() const {
  if (is_zero()) return PolyT();
  return scaled(BigQ(1) / leading());
}

PolyT PolyT::pow(int e) const {
  if (e < 0) throw std::invalid_argument("PolyT::pow: negative exponent");
  PolyT result = PolyT::one();
  PolyT base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return result;
}

PolyT PolyT::subst_power(int d) const {
  if (d < 1) throw std::invalid_argument("PolyT::subst_power: d must be >= 1");
  if (is_zero() || d == 1) return *this;
  std::vector<BigQ> v((coeffs_.size() - 1) * d + 1, BigQ(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * d] = coeffs_[i];
  return PolyT(std::move(v));
}

BigQ PolyT::eval(const BigQ& x) const {
  BigQ acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void PolyT::divmod(const PolyT& a, const PolyT& b, PolyT& q, PolyT& r) {
  if (b.is_zero()) throw std::domain_error("PolyT::divmod: division by zero");
  std::vector<BigQ> rem = a.coeffs_;
  int db = b.degree();
  BigQ lead = b.leading();
  std::vector<BigQ> quot;
  if (static_cast<int>(rem.size()) - 1 >= db)
    quot.assign(rem.size() - db, BigQ(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    BigQ c = rem[i] / lead;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs_[j];
  }
  q = PolyT(std::move(quot));
  r = PolyT(std::move(rem));
}

PolyT PolyT::div_exact(const PolyT& a, const PolyT& b) {
  PolyT q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("PolyT::div_exact: inexact division");
  return q;
}

namespace {

// Integer image of a rational polynomial: primitive, positive leading
// coefficient. Content bookkeeping is dropped since gcd is normalized to
// monic anyway.
std::vector<mpz_class> primitive_z(const PolyT& f) {
  mpz_class denlcm(1);
  for (const BigQ& c : f.coeffs()) mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z(f.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    BigQ scaled = f.coeffs()[i] * BigQ(denlcm);
    z[i] = scaled.get_num();
  }
  mpz_class content(0);
  for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content != 0) {
    for (auto& c : z) c /= content;
  }
  if (!z.empty() && z.back() < 0) {
    for (auto& c : z) c = -c;
  }
  return z;
}

void make_primitive(std::vector<mpz_class>& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
  mpz_class content(0);
  for (const auto& c : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content != 0) {
    for (auto& c : z) c /= content;
  }
  if (!z.empty() && z.back() < 0) {
    for (auto& c : z) c = -c;
  }
}

// Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  int db = static_cast<int>(b.size()) - 1;
  const mpz_class& lead = b.back();
  while (static_cast<int>(a.size()) - 1 >= db) {
    if (a.back() == 0) {
      a.pop_back();
      continue;
    }
    int shift = static_cast<int>(a.size()) - 1 - db;
    mpz_class top = a.back();
    for (auto& c : a) c *= lead;
    for (int j = 0; j <= db; ++j) a[shift + j] -= top * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

PolyT PolyT::gcd(const PolyT& a, const PolyT& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  std::vector<mpz_class> x = primitive_z(a);
  std::vector<mpz_class> y = primitive_z(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<mpz_class> r = pseudo_rem(x, y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<BigQ> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) g[i] = BigQ(x[i]);
  return PolyT(std::move(g)).monic();
}

std::string PolyT::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigQ& c = coeffs_[i];
    if (c == 0) continue;
    BigQ abs = c < 0 ? BigQ(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = abs == 1;
    if (i == 0) {
      out += bigq_to_string(abs);
    } else {
      if (!unit) out += bigq_to_string(abs) + "*";
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

RatFunc::RatFunc(const BigQ& constant) : num_(constant) {}
RatFunc::RatFunc(long constant) : num_(constant) {}
RatFunc::RatFunc(const PolyT& num) : num_(num) {}

RatFunc::RatFunc(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = PolyT::one();
    return;
  }
  PolyT g = PolyT::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = PolyT::div_exact(num_, g);
    den_ = PolyT::div_exact(den_, g);
  }
  BigQ lead = den_.leading();
  if (lead != 1) {
    BigQ inv = BigQ(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::t_power(long k) {
  if (k >= 0) return RatFunc(PolyT::monomial(static_cast<int>(k)));
  return RatFunc(PolyT::one(), PolyT::monomial(static_cast<int>(-k)));
}

const PolyT& RatFunc::as_poly() const {
  if (!is_polynomial()) throw std::logic_error("RatFunc::as_poly: " + to_string() + " is not a polynomial");
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e == 0) return RatFunc::one();
  if (e < 0) return RatFunc::one() / pow(-e);
  RatFunc result = RatFunc::one();
  RatFunc base = *this;
  int k = e;
  while (k > 0) {
    if (k & 1) result *= base;
    if (k > 1) base *= base;
    k >>= 1;
  }
  return result;
}

RatFunc RatFunc::subst_power(int d) const {
  RatFunc r;
  r.num_ = num_.subst_power(d);
  r.den_ = den_.subst_power(d);
  r.normalize();  // keeps the denominator monic
  return r;
}

RatFunc RatFunc::subst_invert() const {
  if (is_zero()) return RatFunc();
  int m = std::max(num_.degree(), den_.degree());
  auto reverse_to = [m](const PolyT& f) {
    std::vector<BigQ> v(m + 1, BigQ(0));
    for (int i = 0; i <= f.degree(); ++i) v[m - i] = f.coeff(i);
    return PolyT(std::move(v));
  };
  return RatFunc(reverse_to(num_), reverse_to(den_));
}

BigQ RatFunc::eval_at(const BigQ& x) const {
  BigQ d = den_.eval(x);
  if (d == 0) throw PoleError("RatFunc::eval_at: pole at " + bigq_to_string(x));
  return num_.eval(x) / d;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

PolyT q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
  return PolyT(std::vector<BigQ>(n, BigQ(1)));
}

PolyT q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  PolyT f = PolyT::one();
  for (int i = 1; i <= n; ++i) f *= q_int(i);
  return f;
}

PolyT q_binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_binomial: negative argument");
  if (k > n) return PolyT::zero();
  if (k > n - k) k = n - k;
  // Pascal-style recurrence keeps everything inside Z[t], no division needed.
  static std::map<std::pair<int, int>, PolyT> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  std::vector<PolyT> row(k + 1);
  row[0] = PolyT::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      // [i over j] = [i-1 over j] + t^(i-j) [i-1 over j-1]
      PolyT carry = j == i ? PolyT::zero() : row[j];
      row[j] = carry + row[j - 1].shifted(i - j);
    }
  }
  cache[{n, k}] = row[k];
  return row[k];
}

RatFunc q_multinomial(int n, const WeakComposition& alpha) {
  if (n < 0) throw std::invalid_argument("q_multinomial: n must be nonnegative");
  if (alpha.sum() != n)
    throw std::invalid_argument("q_multinomial: parts must sum to n");
  RatFunc result(q_factorial(n));
  for (int a : alpha.parts()) result /= RatFunc(q_factorial(a));
  return result;
}

}  // namespace qprofile
