#include "qprofile/hlwhittaker.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "qprofile/config.hpp"
#include "qprofile/linalg.hpp"
#include "qprofile/tableaux.hpp"

namespace qprofile {

namespace {

// Inverse of the Kostka-Foulkes matrix per degree; row mu holds the Schur
// coefficients of P_mu.
const RatFuncMatrix& kf_inverse(int n) {
  static std::map<int, RatFuncMatrix> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto parts = partitions_of(n);
  int count = static_cast<int>(parts.size());
  RatFuncMatrix kf(count, count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      kf.at(i, j) = RatFunc(kostka_foulkes(parts[i], parts[j]));
    }
  }
  return cache.emplace(n, kf.inverse()).first->second;
}

}  // namespace

SymFunc modified_hl(const Partition& lambda) {
  int n = lambda.sum();
  SymFunc f(n);
  for (const auto& mu : partitions_of(n)) {
    f.add_term(mu, RatFunc(modified_kostka(mu, lambda)));
  }
  return f;
}

SymFunc transformed_hl(const Partition& lambda) {
  int n = lambda.sum();
  SymFunc f(n);
  for (const auto& mu : partitions_of(n)) {
    f.add_term(mu, RatFunc(kostka_foulkes(mu, lambda)));
  }
  return f;
}

SymFunc hl_p(const Partition& lambda) {
  int n = lambda.sum();
  auto parts = partitions_of(n);
  const RatFuncMatrix& inv = kf_inverse(n);
  int row = -1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == lambda) row = static_cast<int>(i);
  }
  SymFunc f(n);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    f.add_term(parts[j], inv.at(row, static_cast<int>(j)));
  }
  return f;
}

SymFunc q_whittaker(const Partition& lambda) {
  int n = lambda.sum();
  Partition lc = conjugate(lambda);
  SymFunc f(n);
  for (const auto& mu : partitions_of(n)) {
    f.add_term(mu, RatFunc(kostka_foulkes(conjugate(mu), lc)));
  }
  return f;
}

SymFunc dual_q_whittaker(const Partition& lambda) {
  return omega(hl_p(conjugate(lambda)));
}

SymFunc plethysm_pd(int d, const SymFunc& f) {
  if (d < 1) throw std::invalid_argument("plethysm_pd: d must be >= 1");
  int degree = d * f.degree();
  if (degree > kDegreeCap)
    throw std::invalid_argument("plethysm_pd: degree cap exceeded");
  auto pc = to_basis(f, BasisId::p);
  SymFunc result(degree);
  for (const auto& [nu, c] : pc) {
    std::vector<int> scaled(nu.length());
    for (std::size_t i = 0; i < nu.length(); ++i) scaled[i] = d * nu[i];
    result = result + (c.subst_power(d) * from_basis(BasisId::p, Partition(std::move(scaled))));
  }
  return result;
}

namespace {

SymFunc pleth_scale(const SymFunc& f, bool invert) {
  auto pc = to_basis(f, BasisId::p);
  SymFunc result(f.degree());
  for (const auto& [nu, c] : pc) {
    RatFunc factor = RatFunc::one();
    for (std::size_t i = 0; i < nu.length(); ++i) {
      RatFunc onem = RatFunc::one() - RatFunc::t_power(nu[i]);
      factor = invert ? factor / onem : factor * onem;
    }
    result = result + (c * factor * from_basis(BasisId::p, nu));
  }
  return result;
}

}  // namespace

SymFunc pleth_times_onem(const SymFunc& f) { return pleth_scale(f, false); }

SymFunc pleth_over_onem(const SymFunc& f) { return pleth_scale(f, true); }

PolyT pieri_psi(const Partition& eta, const Partition& mu) {
  return pieri_psi(eta, std::span<const int>(mu.parts()));
}

PolyT pieri_psi(const Partition& eta, std::span<const int> row) {
  std::size_t len = std::max(eta.length(), row.size());
  auto row_at = [&row](std::size_t i) { return i < row.size() ? row[i] : 0; };
  for (std::size_t i = 0; i < len; ++i) {
    // horizontal strip: eta_{i+1} <= row_i <= eta_i
    if (row_at(i) > eta[i] || row_at(i) < eta[i + 1]) return PolyT::zero();
  }
  PolyT result = PolyT::one();
  for (std::size_t i = 0; i < eta.length(); ++i) {
    result *= q_binomial(eta[i] - eta[i + 1], eta[i] - row_at(i));
  }
  return result;
}

RatFunc strip_theta(const Partition& mu, const Partition& rho) {
  if (!is_horizontal_strip({mu, rho})) return RatFunc::zero();
  RatFunc result(q_factorial(mu.sum() - rho.sum()));
  result /= RatFunc(q_factorial(mu.first() - rho.first()));
  for (std::size_t i = 0; i < mu.length(); ++i) {
    result *= RatFunc(q_binomial(rho[i] - rho[i + 1], mu[i + 1] - rho[i + 1]));
  }
  return result;
}

SymFunc basis_element(BasisId tag, const Partition& lambda) {
  switch (tag) {
    case BasisId::P: return hl_p(lambda);
    case BasisId::H: return transformed_hl(lambda);
    case BasisId::Hmod: return modified_hl(lambda);
    case BasisId::W: return q_whittaker(lambda);
    case BasisId::Wdual: return dual_q_whittaker(lambda);
    default: return from_basis(tag, lambda);
  }
}

std::map<Partition, RatFunc> expand_in(const SymFunc& f, BasisId tag) {
  switch (tag) {
    case BasisId::m:
    case BasisId::e:
    case BasisId::h:
    case BasisId::p:
    case BasisId::s:
      return to_basis(f, tag);
    default:
      break;
  }
  int n = f.degree();
  auto parts = partitions_of(n);
  int count = static_cast<int>(parts.size());
  RatFuncMatrix m(count, count);
  for (int j = 0; j < count; ++j) {
    SymFunc basis = basis_element(tag, parts[j]);
    for (int i = 0; i < count; ++i) m.at(i, j) = basis.schur_coeff(parts[i]);
  }
  std::vector<RatFunc> rhs(count);
  for (int i = 0; i < count; ++i) rhs[i] = f.schur_coeff(parts[i]);
  std::vector<RatFunc> sol = m.solve(rhs);
  std::map<Partition, RatFunc> out;
  for (int j = 0; j < count; ++j) {
    if (!sol[j].is_zero()) out.emplace(parts[j], sol[j]);
  }
  return out;
}

}  // namespace qprofile
