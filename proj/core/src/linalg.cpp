#include "qprofile/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qprofile {

RatFuncMatrix RatFuncMatrix::identity(int n) {
  RatFuncMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc::one();
  return m;
}

RatFuncMatrix RatFuncMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse: matrix not square");
  int n = rows_;
  RatFuncMatrix work = *this;
  RatFuncMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("inverse: singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(work.at(col, j), work.at(pivot, j));
      std::swap(inv.at(col, j), inv.at(pivot, j));
    }
    RatFunc p = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      RatFunc f = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

RatFunc RatFuncMatrix::determinant() const {
  if (rows_ != cols_) throw std::domain_error("determinant: matrix not square");
  int n = rows_;
  RatFuncMatrix work = *this;
  RatFunc det = RatFunc::one();
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return RatFunc::zero();
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(work.at(col, j), work.at(pivot, j));
      det = -det;
    }
    RatFunc p = work.at(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (work.at(r, col).is_zero()) continue;
      RatFunc f = work.at(r, col) / p;
      for (int j = col; j < n; ++j) work.at(r, j) -= f * work.at(col, j);
    }
  }
  return det;
}

std::vector<RatFunc> RatFuncMatrix::solve(const std::vector<RatFunc>& b) const {
  if (rows_ != cols_) throw std::domain_error("solve: matrix not square");
  if (static_cast<int>(b.size()) != rows_) throw std::domain_error("solve: size mismatch");
  int n = rows_;
  RatFuncMatrix work = *this;
  std::vector<RatFunc> rhs = b;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw std::domain_error("solve: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(work.at(col, j), work.at(pivot, j));
      std::swap(rhs[col], rhs[pivot]);
    }
    RatFunc p = work.at(col, col);
    for (int j = col; j < n; ++j) work.at(col, j) /= p;
    rhs[col] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col).is_zero()) continue;
      RatFunc f = work.at(r, col);
      for (int j = col; j < n; ++j) work.at(r, j) -= f * work.at(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace qprofile
