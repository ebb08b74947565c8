#include "qprofile/profiles.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "qprofile/config.hpp"
#include "qprofile/linalg.hpp"
#include "qprofile/tableaux.hpp"

namespace qprofile {

namespace {

long long tail_sum(const Partition& mu) { return mu.sum() - mu.first(); }

long long tail_binom(const Partition& mu) {
  long long total = 0;
  for (std::size_t j = 1; j < mu.length(); ++j) total += binom2(mu[j]);
  return total;
}

long long all_binom(const Partition& mu) {
  long long total = 0;
  for (std::size_t j = 0; j < mu.length(); ++j) total += binom2(mu[j]);
  return total;
}

PolyT to_int_poly(const RatFunc& r, const char* what) {
  if (!r.is_polynomial())
    throw std::logic_error(std::string(what) + ": expected a polynomial, got " + r.to_string());
  const PolyT& p = r.as_poly();
  if (!p.has_integer_coeffs())
    throw std::logic_error(std::string(what) + ": non-integer coefficients in " + p.to_string());
  return p;
}

// [a over b]_t extended the way the closed forms use it: the empty product
// for b = 0 regardless of a, zero for b < 0 or a < b.
PolyT ext_q_binomial(int a, int b) {
  if (b == 0) return PolyT::one();
  if (b < 0 || a < b) return PolyT::zero();
  return q_binomial(a, b);
}

// Enumerate partitions rho such that mu/rho is a horizontal strip of the
// given size: rho_i in [mu_{i+1}, mu_i] with the right total.
void strips_below(const Partition& mu, int strip_size, std::size_t row,
                  int removed, std::vector<int>& cur,
                  std::vector<Partition>& out) {
  if (row == mu.length()) {
    if (removed == strip_size) out.emplace_back(cur);
    return;
  }
  for (int v = mu[row]; v >= mu[row + 1]; --v) {
    int r = removed + mu[row] - v;
    if (r > strip_size) continue;
    cur.push_back(v);
    strips_below(mu, strip_size, row + 1, r, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> horizontal_strips_below(const Partition& mu, int strip_size) {
  std::vector<Partition> out;
  std::vector<int> cur;
  strips_below(mu, strip_size, 0, 0, cur, out);
  return out;
}

}  // namespace

SymFunc flag_gf(const SimilarityType& tau) {
  if (tau.size() > kDegreeCap)
    throw std::invalid_argument("flag_gf: type size exceeds the degree cap");
  static std::map<SimilarityType, SymFunc> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(tau);
    if (it != cache.end()) return it->second;
  }
  SymFunc f = SymFunc::unit();
  for (const auto& block : tau.blocks()) {
    f = multiply(f, plethysm_pd(block.degree, modified_hl(block.shape)));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(tau, std::move(f)).first->second;
}

namespace {

const std::map<Partition, RatFunc>& flag_gf_monomial(const SimilarityType& tau) {
  static std::map<SimilarityType, std::map<Partition, RatFunc>> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(tau);
    if (it != cache.end()) return it->second;
  }
  auto expansion = to_basis(flag_gf(tau), BasisId::m);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(tau, std::move(expansion)).first->second;
}

}  // namespace

PolyT x_coeff(const Partition& lambda, const SimilarityType& tau) {
  if (lambda.sum() != tau.size())
    throw std::invalid_argument("x_coeff: |lambda| must equal the type size");
  const auto& expansion = flag_gf_monomial(tau);
  auto it = expansion.find(lambda);
  if (it == expansion.end()) return PolyT::zero();
  PolyT p = to_int_poly(it->second, "x_coeff");
  if (!p.has_nonnegative_coeffs())
    throw std::logic_error("x_coeff: negative coefficient in " + p.to_string());
  return p;
}

namespace {

// W-dual times a complete homogeneous filler, the degree-n kernel that picks
// out profile mu from the flag generating function.
const SymFunc& sigma_kernel(const Partition& mu, int n) {
  static std::map<std::pair<Partition, int>, SymFunc> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(mu, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SymFunc filler = from_basis(BasisId::h, Partition{n - mu.sum()});
  SymFunc kernel = multiply(dual_q_whittaker(mu), filler);
  return cache.emplace(key, std::move(kernel)).first->second;
}

}  // namespace

PolyT sigma(const Partition& mu, const SimilarityType& tau) {
  int n = tau.size();
  if (mu.sum() > n) throw std::invalid_argument("sigma: |mu| exceeds the type size");
  RatFunc pairing = hall_inner(flag_gf(tau), sigma_kernel(mu, n));
  RatFunc result = RatFunc(epsilon(conjugate(mu))) *
                   RatFunc::t_power(tail_binom(mu)) * pairing;
  return to_int_poly(result, "sigma");
}

PolyT sigma_regnil(const Partition& mu, int n) {
  if (mu.sum() > n) throw std::invalid_argument("sigma_regnil: |mu| exceeds n");
  PolyT result = PolyT::one();
  for (std::size_t i = 1; i < mu.length(); ++i) {
    result *= PolyT::monomial(mu[i] * mu[i]);
    result *= q_binomial(mu[i - 1], mu[i]);
  }
  return result;
}

RatFunc sigma_simple(const Partition& mu, int n) {
  if (mu.sum() > n) throw std::invalid_argument("sigma_simple: |mu| exceeds n");
  if (mu.empty()) return RatFunc::one();
  RatFunc result = RatFunc(PolyT::monomial(n) - PolyT::one()) /
                   RatFunc(PolyT::monomial(mu.first()) - PolyT::one());
  for (std::size_t i = 1; i < mu.length(); ++i) {
    result *= RatFunc(PolyT::monomial(mu[i] * mu[i] - mu[i]));
    result *= RatFunc(q_binomial(mu[i - 1], mu[i]));
  }
  return result;
}

PolyT b_poly(const Partition& mu, const Partition& nu) {
  if (mu.sum() != nu.sum()) throw std::invalid_argument("b_poly: size mismatch");
  static std::map<std::pair<Partition, Partition>, PolyT> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({mu, nu});
    if (it != cache.end()) return it->second;
  }
  PolyT result;
  if (nu.empty()) {
    result = PolyT::one();  // mu is empty too
  } else {
    int last = nu[nu.length() - 1];
    std::vector<int> head(nu.parts().begin(), nu.parts().end() - 1);
    Partition trimmed(std::move(head));
    for (const auto& rho : horizontal_strips_below(mu, last)) {
      PolyT sub = b_poly(rho, trimmed);
      if (sub.is_zero()) continue;
      RatFunc theta = strip_theta(mu, rho);
      if (theta.is_zero()) continue;
      result += to_int_poly(theta, "strip_theta") * sub;
    }
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(mu, nu), std::move(result)).first->second;
}

PolyT sigma_diagonal(const Partition& mu, const Partition& nu) {
  if (mu.sum() != nu.sum())
    throw std::invalid_argument("sigma_diagonal: size mismatch");
  PolyT tm1(std::vector<BigQ>{BigQ(-1), BigQ(1)});  // t - 1
  PolyT result = tm1.pow(static_cast<int>(tail_sum(mu)));
  result *= PolyT::monomial(static_cast<int>(tail_binom(mu)));
  result *= b_poly(mu, nu);
  return result;
}

PolyT a_coeff(const Partition& mu, const Partition& lambda) {
  if (mu.sum() != lambda.sum()) throw std::invalid_argument("a_coeff: size mismatch");
  PolyT result;
  for (const auto& eta : partitions_of(mu.sum())) {
    long long k = kostka_number(conjugate(eta), WeakComposition(mu.parts()));
    if (k == 0) continue;
    result += kostka_foulkes(eta, lambda).scaled(to_bigq(k));
  }
  return result;
}

namespace {

const RatFuncMatrix& a_inverse(int n) {
  static std::map<int, RatFuncMatrix> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto parts = partitions_of(n);
  int count = static_cast<int>(parts.size());
  RatFuncMatrix a(count, count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) a.at(i, j) = RatFunc(a_coeff(parts[i], parts[j]));
  }
  return cache.emplace(n, a.inverse()).first->second;
}

}  // namespace

RatFunc a_tilde(const Partition& mu, const Partition& lambda) {
  if (mu.sum() != lambda.sum()) throw std::invalid_argument("a_tilde: size mismatch");
  auto parts = partitions_of(mu.sum());
  int i = -1, j = -1;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] == mu) i = static_cast<int>(k);
    if (parts[k] == lambda) j = static_cast<int>(k);
  }
  return a_inverse(mu.sum()).at(i, j);
}

PolyT sigma_full_via_atilde(const Partition& mu, const SimilarityType& tau) {
  int n = tau.size();
  if (mu.sum() != n)
    throw std::invalid_argument("sigma_full_via_atilde: |mu| must equal the type size");
  Partition muc = conjugate(mu);
  RatFunc total;
  for (const auto& lambda : partitions_of(n)) {
    RatFunc at = a_tilde(muc, lambda);
    if (at.is_zero()) continue;
    total += at * RatFunc(x_coeff(lambda, tau));
  }
  RatFunc result = RatFunc(epsilon(muc)) * RatFunc::t_power(tail_binom(mu)) * total;
  return to_int_poly(result, "sigma_full_via_atilde");
}

RatFunc bcrr_residual(const SimilarityType& tau, const Partition& nu) {
  int n = tau.size();
  if (nu.sum() >= n)
    throw std::invalid_argument("bcrr_residual: requires |nu| < size(tau)");
  RatFunc total;
  for (int m = 0; m <= n; ++m) {
    for (const auto& mu : partitions_of(m)) {
      RatFunc term = RatFunc::t_power(-dot(mu, nu) + binom2(mu.first()));
      if (mu.first() % 2 != 0) term = -term;
      total += term * RatFunc(sigma(mu, tau));
    }
  }
  return total;
}

SymFunc g_partial(const ProfileTuple& rho, int n) {
  if (rho.empty()) throw std::invalid_argument("g_partial: empty profile tuple");
  if (rho.back() == 0)
    throw std::invalid_argument("g_partial: last entry must be nonzero; drop trailing zeros and use sigma");
  int sum = 0;
  for (int v : rho) {
    if (v < 0) throw std::invalid_argument("g_partial: negative entry");
    sum += v;
  }
  if (sum > n) throw std::invalid_argument("g_partial: entries sum past n");
  int r = static_cast<int>(rho.size());
  long long sign_exp = 0, power = 0;
  for (std::size_t j = 1; j < rho.size(); ++j) {
    sign_exp += rho[j];
    power += binom2(rho[j]);
  }
  RatFunc prefactor = RatFunc::t_power(power);
  if (sign_exp % 2 != 0) prefactor = -prefactor;
  SymFunc g(n);
  for (const auto& eta : partitions_of(n)) {
    if (static_cast<int>(eta.length()) != r) continue;
    PolyT psi = pieri_psi(eta, std::span<const int>(rho));
    if (psi.is_zero()) continue;
    g = g + (prefactor * RatFunc(psi)) * hl_p(conjugate(eta));
  }
  return g;
}

PolyT pi_partial(const ProfileTuple& rho, const SimilarityType& tau) {
  RatFunc pairing = hall_inner(omega(flag_gf(tau)), g_partial(rho, tau.size()));
  return to_int_poly(pairing, "pi_partial");
}

PolyT anti_invariant_count(int m, int fold, const SimilarityType& tau) {
  int n = tau.size();
  if (m < 0 || fold < 1)
    throw std::invalid_argument("anti_invariant_count: need m >= 0 and fold >= 1");
  if (m * (fold + 1) > n)
    throw std::invalid_argument("anti_invariant_count: m*(fold+1) exceeds the dimension");
  std::vector<int> parts(m, fold + 1);
  parts.insert(parts.end(), n - m * (fold + 1), 1);
  RatFunc pairing = hall_inner(omega(flag_gf(tau)), hl_p(Partition(std::move(parts))));
  RatFunc result = RatFunc::t_power(static_cast<long>(fold) * binom2(m)) * pairing;
  if ((static_cast<long long>(m) * fold) % 2 != 0) result = -result;
  return to_int_poly(result, "anti_invariant_count");
}

SymFunc krylov_g(int n, int k, int ell) {
  if (k < 1 || ell < 1) throw std::invalid_argument("krylov_g: need k, ell >= 1");
  PolyT tm1(std::vector<BigQ>{BigQ(-1), BigQ(1)});  // t - 1
  SymFunc g(n);
  for (const auto& mu : partitions_of(n)) {
    if (static_cast<int>(mu.length()) > ell) continue;
    PolyT head = q_binomial(k, mu.first());
    if (head.is_zero()) continue;  // mu_1 > k
    PolyT coeff = head * q_factorial(mu.first()) * tm1.pow(mu.first());
    coeff *= PolyT::monomial(static_cast<int>(all_binom(mu)));
    RatFunc c = RatFunc(coeff) * RatFunc::t_power(-static_cast<long>(n) * k);
    if ((n - mu.first()) % 2 != 0) c = -c;
    g = g + c * dual_q_whittaker(mu);
  }
  return g;
}

RatFunc krylov_prob(int k, int ell, const SimilarityType& tau) {
  return hall_inner(flag_gf(tau), krylov_g(tau.size(), k, ell));
}

bool psisum_check(const Partition& eta, const Partition& nu) {
  // Left side: alternating sum over all mu with eta/mu a horizontal strip.
  RatFunc lhs;
  for (int removed = 0; removed <= eta.sum(); ++removed) {
    for (const auto& mu : horizontal_strips_below(eta, removed)) {
      PolyT psi = pieri_psi(eta, mu);
      if (psi.is_zero()) continue;
      RatFunc term = RatFunc::t_power(-dot(mu, nu) + all_binom(mu)) * RatFunc(psi);
      if (mu.sum() % 2 != 0) term = -term;
      lhs += term;
    }
  }
  // Right side: the closed-form product.
  PolyT onemt(std::vector<BigQ>{BigQ(1), BigQ(-1)});  // 1 - t
  RatFunc rhs = RatFunc(onemt.pow(eta.first())) *
                RatFunc::t_power(-dot(eta, nu) + all_binom(eta));
  for (std::size_t i = 0; i < eta.length(); ++i) {
    int drop = eta[i] - eta[i + 1];
    rhs *= RatFunc(ext_q_binomial(nu[i] - eta[i + 1], drop));
    rhs *= RatFunc(q_factorial(drop));
  }
  if (eta.sum() % 2 != 0) rhs = -rhs;
  bool ok = lhs == rhs;
  if (nu.sum() < eta.sum()) ok = ok && lhs.is_zero();
  return ok;
}

bool bcrr_determinant_check(int n) {
  auto ideal = partitions_up_to(n, IdealBound::strict);
  int count = static_cast<int>(ideal.size());
  RatFuncMatrix m(count, count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      m.at(i, j) = RatFunc::t_power(-dot(ideal[i], ideal[j]));
    }
  }
  RatFunc det = m.determinant();
  if (det.is_zero()) return false;

  // Order-ideal product formula specialized to x_{i,j} = t^{-j}.
  RatFunc prod = RatFunc::one();
  for (const auto& lam : ideal) {
    long long e = 0;
    for (std::size_t k = 0; k + 1 < lam.length(); ++k) e += static_cast<long long>(lam[k]) * lam[k + 1];
    prod *= RatFunc::t_power(-e);
  }
  for (const auto& lam : ideal) {
    for (const auto& mu : ideal) {
      if (!contains(mu, lam)) continue;
      int differing = -1;
      bool exactly_one = true;
      std::size_t len = std::max(lam.length(), mu.length());
      for (std::size_t r = 0; r < len; ++r) {
        if (lam[r] != mu[r]) {
          if (differing >= 0) {
            exactly_one = false;
            break;
          }
          differing = static_cast<int>(r);
        }
      }
      if (!exactly_one || differing < 0) continue;
      prod *= RatFunc::t_power(-mu[differing]) - RatFunc::t_power(-lam[differing]);
    }
  }
  return det == prod || det == -prod;
}

}  // namespace qprofile
