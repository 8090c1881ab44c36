#include "projdes/scalar_matrix.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace projdes {

ScalarMatrix::ScalarMatrix(int size, const RealScalar& fill)
    : size_(size), e_(static_cast<size_t>(size) * size, fill) {
  if (size < 0) throw std::domain_error("matrix size must be nonnegative");
}

ScalarMatrix ScalarMatrix::identity(int size, bool exact) {
  ScalarMatrix m(size, exact ? RealScalar(Rational(0)) : RealScalar(0.0));
  for (int i = 0; i < size; ++i) m.at(i, i) = exact ? RealScalar(Rational(1)) : RealScalar(1.0);
  return m;
}

ScalarMatrix ScalarMatrix::ones(int size, bool exact) {
  return ScalarMatrix(size, exact ? RealScalar(Rational(1)) : RealScalar(1.0));
}

bool ScalarMatrix::all_exact() const {
  for (const RealScalar& v : e_)
    if (!v.is_exact()) return false;
  return true;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.size_ != b.size_) throw std::domain_error("matrix size mismatch");
  const int n = a.size_;
  ScalarMatrix out(n, a.size_ && !a.e_[0].is_exact() ? RealScalar(0.0) : RealScalar());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RealScalar acc = a.at(i, 0) * b.at(0, j);
      for (int k = 1; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  return out;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.size_ != b.size_) throw std::domain_error("matrix size mismatch");
  ScalarMatrix out(a.size_);
  for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
  return out;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.size_ != b.size_) throw std::domain_error("matrix size mismatch");
  ScalarMatrix out(a.size_);
  for (size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
  return out;
}

ScalarMatrix ScalarMatrix::scaled(const RealScalar& s) const {
  ScalarMatrix out(size_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.size_ == b.size_ && a.e_ == b.e_;
}

RealScalar ScalarMatrix::trace() const {
  RealScalar acc = size_ && !e_[0].is_exact() ? RealScalar(0.0) : RealScalar();
  for (int i = 0; i < size_; ++i) acc += at(i, i);
  return acc;
}

double ScalarMatrix::max_abs_diff(const ScalarMatrix& o) const {
  if (size_ != o.size_) throw std::domain_error("matrix size mismatch");
  double worst = 0.0;
  for (size_t i = 0; i < e_.size(); ++i)
    worst = std::max(worst, (e_[i] - o.e_[i]).abs_double());
  return worst;
}

int exact_rank(const ScalarMatrix& m) {
  if (!m.all_exact()) throw std::domain_error("exact_rank needs exact entries");
  const int n = m.size();
  ScalarMatrix a = m;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int row = rank; row < n; ++row)
      if (!a.at(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = col; j < n; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
    RealScalar inv = RealScalar(Rational(1)) / a.at(rank, col);
    for (int row = rank + 1; row < n; ++row) {
      if (a.at(row, col).is_zero()) continue;
      RealScalar f = a.at(row, col) * inv;
      for (int j = col; j < n; ++j) a.at(row, j) -= f * a.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

int float_rank(const ScalarMatrix& m, double tol) {
  const int n = m.size();
  if (n == 0) return 0;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j).to_double();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solve failed");
  Eigen::VectorXd ev = solver.eigenvalues().cwiseAbs();
  double top = ev.maxCoeff();
  if (top == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < n; ++i)
    if (ev(i) > tol * top) ++rank;
  return rank;
}

int matrix_rank(const ScalarMatrix& m, double tol) {
  return m.all_exact() ? exact_rank(m) : float_rank(m, tol);
}

}  // namespace projdes
