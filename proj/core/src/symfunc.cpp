#include "qprofile/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "qprofile/config.hpp"
#include "qprofile/linalg.hpp"
#include "qprofile/tableaux.hpp"

namespace qprofile {

BasisId basis_from_string(const std::string& tag) {
  if (tag == "m") return BasisId::m;
  if (tag == "e") return BasisId::e;
  if (tag == "h") return BasisId::h;
  if (tag == "p") return BasisId::p;
  if (tag == "s") return BasisId::s;
  if (tag == "P") return BasisId::P;
  if (tag == "H") return BasisId::H;
  if (tag == "Hmod") return BasisId::Hmod;
  if (tag == "W") return BasisId::W;
  if (tag == "Wdual") return BasisId::Wdual;
  throw std::invalid_argument("unknown basis tag: " + tag);
}

std::string basis_to_string(BasisId tag) {
  switch (tag) {
    case BasisId::m: return "m";
    case BasisId::e: return "e";
    case BasisId::h: return "h";
    case BasisId::p: return "p";
    case BasisId::s: return "s";
    case BasisId::P: return "P";
    case BasisId::H: return "H";
    case BasisId::Hmod: return "Hmod";
    case BasisId::W: return "W";
    case BasisId::Wdual: return "Wdual";
  }
  throw std::logic_error("basis_to_string: bad tag");
}

SymFunc SymFunc::unit() {
  SymFunc f(0);
  f.add_term(Partition{}, RatFunc::one());
  return f;
}

RatFunc SymFunc::schur_coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RatFunc::zero() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const RatFunc& c) {
  if (c.is_zero()) return;
  if (lambda.sum() != degree_)
    throw std::invalid_argument("SymFunc::add_term: wrong degree");
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    coeffs_.emplace(lambda, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  if (a.degree_ != b.degree_)
    throw std::invalid_argument("SymFunc: degree mismatch in +");
  SymFunc r = a;
  for (const auto& [lam, c] : b.coeffs_) r.add_term(lam, c);
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  if (a.degree_ != b.degree_)
    throw std::invalid_argument("SymFunc: degree mismatch in -");
  SymFunc r = a;
  for (const auto& [lam, c] : b.coeffs_) r.add_term(lam, -c);
  return r;
}

SymFunc SymFunc::operator-() const {
  SymFunc r(degree_);
  for (const auto& [lam, c] : coeffs_) r.coeffs_.emplace(lam, -c);
  return r;
}

SymFunc operator*(const RatFunc& c, const SymFunc& f) {
  SymFunc r(f.degree());
  if (c.is_zero()) return r;
  for (const auto& [lam, v] : f.schur_coeffs()) r.add_term(lam, c * v);
  return r;
}

std::string SymFunc::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [lam, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*s" + lam.to_string();
  }
  return out;
}

namespace {

// Character of the symmetric group at cycle type mu, evaluated by the
// border-strip recursion on beta numbers.
long long chi_rec(std::vector<int>& beta, const Partition& mu, std::size_t idx) {
  if (idx == mu.length()) {
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (beta[i] != static_cast<int>(i)) return 0;
    }
    return 1;
  }
  int r = mu[idx];
  long long total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    int target = beta[k] - r;
    if (target < 0) continue;
    bool occupied = false;
    int between = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) {
        occupied = true;
        break;
      }
      if (beta[j] > target && beta[j] < beta[k]) ++between;
    }
    if (occupied) continue;
    int saved = beta[k];
    beta[k] = target;
    std::sort(beta.begin(), beta.end());
    long long sub = chi_rec(beta, mu, idx + 1);
    // restore
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) {
        beta[j] = saved;
        break;
      }
    }
    std::sort(beta.begin(), beta.end());
    total += (between % 2 == 0) ? sub : -sub;
  }
  return total;
}

long long chi_char(const Partition& lambda, const Partition& mu) {
  std::size_t len = lambda.length();
  std::vector<int> beta(len);
  for (std::size_t i = 0; i < len; ++i)
    beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
  std::sort(beta.begin(), beta.end());
  return chi_rec(beta, mu, 0);
}

BigQ z_value(const Partition& mu) {
  BigQ z(1);
  int run = 0;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    ++run;
    if (i + 1 == mu.length() || mu[i + 1] != mu[i]) {
      for (int k = 1; k <= run; ++k) z *= k;
      for (int k = 0; k < run; ++k) z *= mu[i];
      run = 0;
    }
  }
  return z;
}

struct CharTables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::vector<std::vector<long long>> chi;  // [lambda][mu]
  std::vector<BigQ> z;
};

const CharTables& char_tables(int n) {
  static std::map<int, CharTables> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CharTables t;
  t.parts = partitions_of(n);
  int count = static_cast<int>(t.parts.size());
  for (int i = 0; i < count; ++i) t.index[t.parts[i]] = i;
  t.chi.assign(count, std::vector<long long>(count, 0));
  t.z.resize(count);
  for (int j = 0; j < count; ++j) {
    t.z[j] = z_value(t.parts[j]);
    for (int i = 0; i < count; ++i) t.chi[i][j] = chi_char(t.parts[i], t.parts[j]);
  }
  return cache.emplace(n, std::move(t)).first->second;
}

struct KostkaTables {
  std::vector<std::vector<long long>> kostka;   // [lambda][mu]
  std::vector<std::vector<BigQ>> kostka_inv;    // [mu][lambda]
};

const KostkaTables& kostka_tables(int n) {
  static std::map<int, KostkaTables> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const auto& ct = char_tables(n);
  int count = static_cast<int>(ct.parts.size());
  KostkaTables t;
  t.kostka.assign(count, std::vector<long long>(count, 0));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      t.kostka[i][j] = kostka_number(ct.parts[i], WeakComposition(ct.parts[j].parts()));
    }
  }
  RatFuncMatrix m(count, count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) m.at(i, j) = RatFunc(t.kostka[i][j]);
  }
  RatFuncMatrix inv = m.inverse();
  t.kostka_inv.assign(count, std::vector<BigQ>(count));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const RatFunc& e = inv.at(i, j);
      t.kostka_inv[i][j] = e.is_zero() ? BigQ(0) : e.as_poly().coeff(0);
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

std::map<Partition, RatFunc> to_p_coeffs(const SymFunc& f) {
  const auto& ct = char_tables(f.degree());
  std::map<Partition, RatFunc> out;
  for (std::size_t j = 0; j < ct.parts.size(); ++j) {
    RatFunc c;
    for (const auto& [lam, v] : f.schur_coeffs()) {
      long long x = ct.chi[ct.index.at(lam)][j];
      if (x != 0) c += RatFunc(x) * v;
    }
    if (!c.is_zero()) out.emplace(ct.parts[j], c * RatFunc(BigQ(1) / ct.z[j]));
  }
  return out;
}

SymFunc from_p_coeffs(int degree, const std::map<Partition, RatFunc>& coeffs) {
  const auto& ct = char_tables(degree);
  SymFunc f(degree);
  for (const auto& lam : ct.parts) {
    RatFunc c;
    int i = ct.index.at(lam);
    for (const auto& [nu, v] : coeffs) {
      long long x = ct.chi[i][ct.index.at(nu)];
      if (x != 0) c += RatFunc(x) * v;
    }
    f.add_term(lam, c);
  }
  return f;
}

}  // namespace

SymFunc from_basis(BasisId tag, const Partition& lambda) {
  int n = lambda.sum();
  if (n > kDegreeCap) throw std::invalid_argument("from_basis: degree cap exceeded");
  SymFunc f(n);
  switch (tag) {
    case BasisId::s:
      f.add_term(lambda, RatFunc::one());
      return f;
    case BasisId::h: {
      const auto& ct = char_tables(n);
      const auto& kt = kostka_tables(n);
      int j = ct.index.at(lambda);
      for (std::size_t i = 0; i < ct.parts.size(); ++i) {
        if (kt.kostka[i][j] != 0) f.add_term(ct.parts[i], RatFunc(kt.kostka[i][j]));
      }
      return f;
    }
    case BasisId::e:
      return omega(from_basis(BasisId::h, lambda));
    case BasisId::p: {
      const auto& ct = char_tables(n);
      int j = ct.index.at(lambda);
      for (std::size_t i = 0; i < ct.parts.size(); ++i) {
        if (ct.chi[i][j] != 0) f.add_term(ct.parts[i], RatFunc(ct.chi[i][j]));
      }
      return f;
    }
    case BasisId::m: {
      const auto& ct = char_tables(n);
      const auto& kt = kostka_tables(n);
      int mu = ct.index.at(lambda);
      for (std::size_t i = 0; i < ct.parts.size(); ++i) {
        // s = K m, hence m_mu = sum_lambda (K^-1)_{mu,lambda} s_lambda.
        const BigQ& c = kt.kostka_inv[mu][i];
        if (c != 0) f.add_term(ct.parts[i], RatFunc(c));
      }
      return f;
    }
    default:
      throw std::invalid_argument(
          "from_basis: one-parameter bases are built in hlwhittaker");
  }
}

std::map<Partition, RatFunc> to_basis(const SymFunc& f, BasisId tag) {
  int n = f.degree();
  std::map<Partition, RatFunc> out;
  switch (tag) {
    case BasisId::s:
      return f.schur_coeffs();
    case BasisId::m: {
      const auto& ct = char_tables(n);
      const auto& kt = kostka_tables(n);
      for (std::size_t j = 0; j < ct.parts.size(); ++j) {
        RatFunc c;
        for (const auto& [lam, v] : f.schur_coeffs()) {
          long long k = kt.kostka[ct.index.at(lam)][j];
          if (k != 0) c += RatFunc(k) * v;
        }
        if (!c.is_zero()) out.emplace(ct.parts[j], c);
      }
      return out;
    }
    case BasisId::h: {
      const auto& ct = char_tables(n);
      const auto& kt = kostka_tables(n);
      for (std::size_t mu = 0; mu < ct.parts.size(); ++mu) {
        RatFunc c;
        for (const auto& [lam, v] : f.schur_coeffs()) {
          const BigQ& k = kt.kostka_inv[mu][ct.index.at(lam)];
          if (k != 0) c += RatFunc(k) * v;
        }
        if (!c.is_zero()) out.emplace(ct.parts[mu], c);
      }
      return out;
    }
    case BasisId::e:
      return to_basis(omega(f), BasisId::h);
    case BasisId::p:
      return to_p_coeffs(f);
    default:
      throw std::invalid_argument("to_basis: one-parameter bases are handled in hlwhittaker");
  }
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  int degree = f.degree() + g.degree();
  if (degree > kDegreeCap)
    throw std::invalid_argument("multiply: degree cap exceeded");
  if (f.is_zero() || g.is_zero()) return SymFunc(degree);
  auto fp = to_p_coeffs(f);
  auto gp = to_p_coeffs(g);
  std::map<Partition, RatFunc> prod;
  for (const auto& [lam, a] : fp) {
    for (const auto& [mu, b] : gp) {
      std::vector<int> merged;
      merged.reserve(lam.length() + mu.length());
      merged.insert(merged.end(), lam.parts().begin(), lam.parts().end());
      merged.insert(merged.end(), mu.parts().begin(), mu.parts().end());
      std::sort(merged.begin(), merged.end(), std::greater<int>());
      Partition key(std::move(merged));
      auto it = prod.find(key);
      if (it == prod.end()) {
        prod.emplace(key, a * b);
      } else {
        it->second += a * b;
      }
    }
  }
  return from_p_coeffs(degree, prod);
}

RatFunc hall_inner(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree()) return RatFunc::zero();
  RatFunc total;
  for (const auto& [lam, c] : f.schur_coeffs()) {
    RatFunc other = g.schur_coeff(lam);
    if (!other.is_zero()) total += c * other;
  }
  return total;
}

SymFunc omega(const SymFunc& f) {
  SymFunc r(f.degree());
  for (const auto& [lam, c] : f.schur_coeffs()) r.add_term(conjugate(lam), c);
  return r;
}

SymFunc map_coeffs(const SymFunc& f, const std::function<RatFunc(const RatFunc&)>& fn) {
  SymFunc r(f.degree());
  for (const auto& [lam, c] : f.schur_coeffs()) r.add_term(lam, fn(c));
  return r;
}

SymFunc specialize_t(const SymFunc& f, const BigQ& value) {
  return map_coeffs(f, [&value](const RatFunc& c) { return RatFunc(c.eval_at(value)); });
}

}  // namespace qprofile
