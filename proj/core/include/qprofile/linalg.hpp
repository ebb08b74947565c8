#pragma once

#include <vector>

#include "qprofile/ratfunc.hpp"

namespace qprofile {

/// Dense matrix over the field of rational functions. Only the handful of
/// exact operations the basis-change code needs: solve, invert, determinant.
class RatFuncMatrix {
public:
  RatFuncMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RatFuncMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RatFunc& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const RatFunc& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  /// Gauss-Jordan inverse; throws std::domain_error if singular.
  RatFuncMatrix inverse() const;
  RatFunc determinant() const;
  /// Solve A x = b for square A.
  std::vector<RatFunc> solve(const std::vector<RatFunc>& b) const;

private:
  int rows_, cols_;
  std::vector<RatFunc> a_;
};

}  // namespace qprofile
