#pragma once

#include <vector>

#include "projdes/real_scalar.hpp"

namespace projdes {

/// Dense square matrix over RealScalar. Whether it is exact is a property of
/// its entries; all-exact matrices support exact elimination.
class ScalarMatrix {
 public:
  explicit ScalarMatrix(int size, const RealScalar& fill = RealScalar());
  static ScalarMatrix identity(int size, bool exact);
  static ScalarMatrix ones(int size, bool exact);

  int size() const { return size_; }
  const RealScalar& at(int i, int j) const { return e_[i * size_ + j]; }
  RealScalar& at(int i, int j) { return e_[i * size_ + j]; }

  bool all_exact() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
  ScalarMatrix scaled(const RealScalar& s) const;
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

  RealScalar trace() const;
  /// max_ij |(a - b)_ij| as doubles; the float-backend comparison metric.
  double max_abs_diff(const ScalarMatrix& o) const;

 private:
  int size_;
  std::vector<RealScalar> e_;
};

/// Rank by Gaussian elimination with exact nonzero pivot tests.
/// Requires an all-exact matrix (throws std::domain_error otherwise).
int exact_rank(const ScalarMatrix& m);

/// Numeric rank of a symmetric matrix: count of eigenvalues with
/// |lambda| > tol * max|lambda|.
int float_rank(const ScalarMatrix& m, double tol = 1e-8);

/// exact_rank for all-exact matrices, float_rank otherwise.
int matrix_rank(const ScalarMatrix& m, double tol = 1e-8);

}  // namespace projdes
