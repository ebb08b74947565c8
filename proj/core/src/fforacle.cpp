#include "qprofile/fforacle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qprofile/config.hpp"

namespace qprofile {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long long mod_inverse(long long a, long long p) {
  // p prime, a nonzero mod p
  long long result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// In-place row reduction to canonical RREF; returns the nonzero rows.
std::vector<std::vector<long long>> rref_rows(long long p,
                                              std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return rows;
  std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    long long inv = mod_inverse(rows[rank][col], p);
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      long long f = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) {
        rows[r][c] = ((rows[r][c] - f * rows[rank][c]) % p + p) % p;
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

FpMatrix::FpMatrix(long long p, int n) : p_(p), n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
  if (!is_prime(p)) throw std::invalid_argument("FpMatrix: modulus must be prime");
  if (n < 0) throw std::invalid_argument("FpMatrix: negative dimension");
}

FpMatrix::FpMatrix(long long p, int n, std::vector<std::vector<long long>> entries)
    : FpMatrix(p, n) {
  if (static_cast<int>(entries.size()) != n)
    throw std::invalid_argument("FpMatrix: wrong number of rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[i].size()) != n)
      throw std::invalid_argument("FpMatrix: wrong row length");
    for (int j = 0; j < n; ++j) set(i, j, entries[i][j]);
  }
}

FpMatrix FpMatrix::identity(long long p, int n) {
  FpMatrix m(p, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::scalar(long long p, int n, long long c) {
  FpMatrix m(p, n);
  for (int i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

void FpMatrix::set(int i, int j, long long v) {
  e_[static_cast<std::size_t>(i) * n_ + j] = (v % p_ + p_) % p_;
}

Subspace::Subspace(long long p, int n, std::vector<std::vector<long long>> rows)
    : p_(p), n_(n), basis_(rref_rows(p, std::move(rows))) {
  for (const auto& row : basis_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("Subspace: wrong row length");
  }
}

Subspace Subspace::zero(long long p, int n) { return Subspace(p, n, {}); }

Subspace Subspace::full(long long p, int n) {
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return Subspace(p, n, std::move(rows));
}

Subspace row_space(long long p, int n, const std::vector<std::vector<long long>>& rows) {
  return Subspace(p, n, rows);
}

Subspace sum_spaces(const Subspace& u, const Subspace& v) {
  if (u.p() != v.p() || u.n() != v.n())
    throw std::invalid_argument("sum_spaces: mismatched ambient spaces");
  std::vector<std::vector<long long>> rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return Subspace(u.p(), u.n(), std::move(rows));
}

Subspace apply(const FpMatrix& delta, const Subspace& w) {
  if (delta.p() != w.p() || delta.n() != w.n())
    throw std::invalid_argument("apply: mismatched ambient spaces");
  int n = w.n();
  long long p = w.p();
  std::vector<std::vector<long long>> images;
  images.reserve(w.basis().size());
  for (const auto& row : w.basis()) {
    std::vector<long long> img(n, 0);
    for (int i = 0; i < n; ++i) {
      long long acc = 0;
      for (int j = 0; j < n; ++j) acc += delta.at(i, j) * row[j] % p;
      img[i] = acc % p;
    }
    images.push_back(std::move(img));
  }
  return Subspace(p, n, std::move(images));
}

bool subspace_contains(const Subspace& big, const Subspace& small) {
  return sum_spaces(big, small).dim() == big.dim();
}

BigQ subspace_count(long long p, int n) {
  BigQ total(0);
  for (int m = 0; m <= n; ++m) {
    total += q_binomial(n, m).eval(to_bigq(p));
  }
  return total;
}

namespace {

void enumerate_dim(long long p, int n, int dim, std::vector<Subspace>& out) {
  // Pivot columns and the free entries to their right determine a canonical
  // RREF matrix uniquely.
  std::vector<int> pivots(dim);
  std::iota(pivots.begin(), pivots.end(), 0);
  auto emit_for_pivots = [&]() {
    std::vector<std::pair<int, int>> free_cells;
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int r = 0; r < dim; ++r) {
      for (int c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free_cells.emplace_back(r, c);
      }
    }
    std::vector<std::vector<long long>> rows(dim, std::vector<long long>(n, 0));
    for (int r = 0; r < dim; ++r) rows[r][pivots[r]] = 1;
    std::vector<long long> values(free_cells.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free_cells.size(); ++i) {
        rows[free_cells[i].first][free_cells[i].second] = values[i];
      }
      out.emplace_back(p, n, rows);
      std::size_t carry = 0;
      while (carry < values.size()) {
        if (++values[carry] < p) break;
        values[carry] = 0;
        ++carry;
      }
      if (carry == values.size()) break;
    }
  };
  if (dim == 0) {
    out.push_back(Subspace::zero(p, n));
    return;
  }
  while (true) {
    emit_for_pivots();
    int i = dim - 1;
    while (i >= 0 && pivots[i] == n - dim + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace

std::vector<Subspace> all_subspaces(long long p, int n, int dim) {
  if (!is_prime(p)) throw std::invalid_argument("all_subspaces: modulus must be prime");
  if (dim < 0 || dim > n) return {};
  BigQ count = q_binomial(n, dim).eval(to_bigq(p));
  if (count > to_bigq(kSubspaceBudget))
    throw BudgetError("all_subspaces: enumeration budget exceeded");
  std::vector<Subspace> out;
  enumerate_dim(p, n, dim, out);
  return out;
}

std::vector<Subspace> all_subspaces(long long p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("all_subspaces: modulus must be prime");
  if (subspace_count(p, n) > to_bigq(kSubspaceBudget))
    throw BudgetError("all_subspaces: enumeration budget exceeded");
  std::vector<Subspace> out;
  for (int m = 0; m <= n; ++m) enumerate_dim(p, n, m, out);
  return out;
}

Partition profile_of(const Subspace& w, const FpMatrix& delta) {
  if (w.p() != delta.p() || w.n() != delta.n())
    throw std::invalid_argument("profile_of: mismatched ambient spaces");
  std::vector<int> increments;
  Subspace current = w;
  int prev_dim = 0;
  while (current.dim() > prev_dim) {
    increments.push_back(current.dim() - prev_dim);
    prev_dim = current.dim();
    current = sum_spaces(current, apply(delta, current));
  }
  return Partition(std::move(increments));
}

long long sigma_bruteforce(const Partition& mu, const FpMatrix& delta) {
  long long count = 0;
  for (const auto& w : all_subspaces(delta.p(), delta.n())) {
    if (profile_of(w, delta) == mu) ++count;
  }
  return count;
}

long long flag_count_bruteforce(const WeakComposition& alpha, const FpMatrix& delta) {
  int n = delta.n();
  if (alpha.sum() != n)
    throw std::invalid_argument("flag_count_bruteforce: |alpha| must equal n");
  std::vector<Subspace> invariant;
  for (const auto& w : all_subspaces(delta.p(), n)) {
    if (subspace_contains(w, apply(delta, w))) invariant.push_back(w);
  }
  std::map<Subspace, long long> paths;
  paths.emplace(Subspace::zero(delta.p(), n), 1);
  int reached = 0;
  for (std::size_t step = 0; step < alpha.length(); ++step) {
    reached += alpha[step];
    std::map<Subspace, long long> next;
    for (const auto& candidate : invariant) {
      if (candidate.dim() != reached) continue;
      long long total = 0;
      for (const auto& [w, cnt] : paths) {
        if (subspace_contains(candidate, w)) total += cnt;
      }
      if (total > 0) next.emplace(candidate, total);
    }
    paths = std::move(next);
  }
  long long result = 0;
  for (const auto& [w, cnt] : paths) result += cnt;
  return result;
}

long long partial_profile_bruteforce(const ProfileTuple& rho, const FpMatrix& delta) {
  long long count = 0;
  for (const auto& w : all_subspaces(delta.p(), delta.n())) {
    Subspace current = w;
    int prev_dim = 0;
    bool match = true;
    for (int target : rho) {
      if (current.dim() - prev_dim != target) {
        match = false;
        break;
      }
      prev_dim = current.dim();
      current = sum_spaces(current, apply(delta, current));
    }
    if (match) ++count;
  }
  return count;
}

long long anti_invariant_bruteforce(int m, int fold, const FpMatrix& delta) {
  if (m < 0 || fold < 1)
    throw std::invalid_argument("anti_invariant_bruteforce: need m >= 0 and fold >= 1");
  return partial_profile_bruteforce(ProfileTuple(fold + 1, m), delta);
}

BigQ krylov_bruteforce(int k, int ell, const FpMatrix& delta) {
  if (k < 1 || ell < 1)
    throw std::invalid_argument("krylov_bruteforce: need k, ell >= 1");
  long long p = delta.p();
  int n = delta.n();
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  mpz_class good(0);
  for (const auto& w : all_subspaces(p, n)) {
    Partition prof = profile_of(w, delta);
    if (prof.sum() != n || static_cast<int>(prof.length()) > ell) continue;
    // Number of k-tuples spanning w: (p^k - 1)(p^k - p) ... (p^k - p^(m-1)).
    mpz_class tuples(1);
    mpz_class pi(1);
    for (int i = 0; i < w.dim(); ++i) {
      tuples *= pk - pi;
      pi *= static_cast<long>(p);
    }
    good += tuples;
  }
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(n) * k);
  BigQ result(good, total);
  result.canonicalize();
  return result;
}

namespace {

using Poly = std::vector<long long>;  // dense coefficients mod p, ascending

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return c;
}

Poly poly_mod(Poly a, const Poly& m, long long p) {
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    long long top = a.back();
    if (top != 0) {
      int shift = static_cast<int>(a.size()) - 1 - dm;
      // m is monic
      for (int j = 0; j <= dm; ++j) a[shift + j] = ((a[shift + j] - top * m[j]) % p + p) % p;
    }
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

// Monic polynomials of the given degree, in lexicographic order of
// low-order coefficients.
std::vector<Poly> monic_polys(int degree, long long p) {
  std::vector<Poly> out;
  Poly coeffs(degree + 1, 0);
  coeffs[degree] = 1;
  while (true) {
    out.push_back(coeffs);
    int i = 0;
    while (i < degree && ++coeffs[i] == p) coeffs[i++] = 0;
    if (i == degree) break;
  }
  return out;
}

bool is_irreducible(const Poly& f, long long p) {
  int d = static_cast<int>(f.size()) - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int e = 1; e <= d / 2; ++e) {
    for (const Poly& g : monic_polys(e, p)) {
      if (poly_is_zero(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

std::vector<Poly> irreducibles_of_degree(int d, long long p, std::size_t needed) {
  std::vector<Poly> out;
  for (const Poly& f : monic_polys(d, p)) {
    if (is_irreducible(f, p)) {
      out.push_back(f);
      if (out.size() == needed) break;
    }
  }
  return out;
}

}  // namespace

FpMatrix build_matrix_of_type(const SimilarityType& tau, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("build_matrix_of_type: p must be prime");
  int n = tau.size();

  // Count how many distinct irreducibles each degree needs, then assign.
  std::map<int, std::size_t> needed;
  for (const auto& block : tau.blocks()) ++needed[block.degree];
  std::map<int, std::vector<Poly>> pool;
  for (const auto& [d, count] : needed) {
    pool[d] = irreducibles_of_degree(d, p, count);
    if (pool[d].size() < count) {
      throw std::invalid_argument(
          "build_matrix_of_type: not enough irreducibles over F_" + std::to_string(p) +
          " of degree " + std::to_string(d));
    }
  }

  FpMatrix result(p, n);
  int offset = 0;
  std::map<int, std::size_t> used;
  for (const auto& block : tau.blocks()) {
    Poly g = pool[block.degree][used[block.degree]++];
    for (int part : block.shape.parts()) {
      // Companion block of g^part.
      Poly power{1};
      for (int e = 0; e < part; ++e) power = poly_mul(power, g, p);
      int size = static_cast<int>(power.size()) - 1;
      for (int i = 0; i + 1 < size; ++i) result.set(offset + i + 1, offset + i, 1);
      for (int i = 0; i < size; ++i) result.set(offset + i, offset + size - 1, (p - power[i]) % p);
      offset += size;
    }
  }
  return result;
}

}  // namespace qprofile
