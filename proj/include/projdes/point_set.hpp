#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "projdes/cyclotomic.hpp"
#include "projdes/jacobi.hpp"
#include "projdes/quaternion.hpp"
#include "projdes/rational.hpp"
#include "projdes/real_scalar.hpp"

namespace projdes {

/// Coordinate representation shared by all points of a set.
enum class Backend {
  exact_rational,
  exact_cyclotomic,
  exact_quaternion,
  float_complex,
  float_quaternion,
};

const char* backend_name(Backend b);
bool backend_is_exact(Backend b);

/// Finite multiset of projective points in FP^n, given by homogeneous
/// coordinate vectors of length n+1. Invariants enforced on construction:
/// every point has a nonzero coordinate, all points share one backend, and
/// the backend's scalars embed into the field F (quaternion entries need
/// F = H; complex/cyclotomic entries need F in {C, H} unless real-valued).
/// Projectively equal pairs are kept and flagged later: angle_set reports
/// them as duplicate-point errors when it meets an off-diagonal 1.
class PointSet {
 public:
  using RationalPoints = std::vector<std::vector<Rational>>;
  using CycloPoints = std::vector<std::vector<Cyclotomic>>;
  using QuatPoints = std::vector<std::vector<Quaternion<Rational>>>;
  using ComplexPoints = std::vector<std::vector<std::complex<double>>>;
  using FloatQuatPoints = std::vector<std::vector<Quaternion<double>>>;
  using Data = std::variant<RationalPoints, CycloPoints, QuatPoints, ComplexPoints, FloatQuatPoints>;

  PointSet(Field field, int n, Data points);

  Field field() const { return field_; }
  int n() const { return n_; }
  int size() const;
  Backend backend() const;
  bool exact() const { return backend_is_exact(backend()); }
  const Data& data() const { return data_; }

  /// Numeric image of the same point set (exact backends degrade to
  /// float_complex or float_quaternion); float backends copy unchanged.
  PointSet to_float() const;

  friend bool operator==(const PointSet& a, const PointSet& b);

 private:
  Field field_;
  int n_;
  Data data_;
};

/// Symmetric matrix of squared projective inner products
/// (x, y) = |x* y|^2 / ((x* x)(y* y)), unit diagonal.
class GramMatrix {
 public:
  GramMatrix(int size, bool exact);
  int size() const { return size_; }
  bool exact() const { return exact_; }
  const RealScalar& at(int i, int j) const { return e_[i * size_ + j]; }
  RealScalar& at(int i, int j) { return e_[i * size_ + j]; }

 private:
  int size_;
  bool exact_;
  std::vector<RealScalar> e_;
};

GramMatrix gram(const PointSet& ps);

/// Distinct off-diagonal Gram values, sorted ascending, with the derived
/// parameters s = |A|, eps = (0 in A), e = s - eps.
struct AngleSet {
  std::vector<RealScalar> values;
  int s = 0, e = 0, eps = 0;
};

/// Exact backends deduplicate exactly; float backends cluster within tol.
/// Throws std::domain_error on an off-diagonal value equal to 1 (duplicate
/// points) or outside [0, 1].
AngleSet angle_set(const GramMatrix& g, double tol = 1e-9);
AngleSet angle_set(const PointSet& ps, double tol = 1e-9);

}  // namespace projdes
