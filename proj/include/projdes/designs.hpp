#pragma once

#include <vector>

#include "projdes/jacobi.hpp"
#include "projdes/point_set.hpp"

namespace projdes {

/// Residual of one strength check. For exact backends `exact` is true and
/// `zero` is decided exactly; `residual` is always the double image of the
/// largest deviation (0.0 when exactly zero), kept for reporting.
struct DegreeResidual {
  int degree = 0;
  bool exact = false;
  bool zero = false;
  double residual = 0.0;
};

struct DesignVerdict {
  bool is_design = false;
  int t_checked = 0;
  std::vector<DegreeResidual> residuals;  // degrees 1..t_checked
};

/// X is a t-design iff sum_x P_i((x, y)) = 0 for every y in X and 1 <= i <= t.
/// Exact backends decide exactly; float backends use the per-degree threshold
/// |X| * tol on max_y |sum_x P_i((x, y))|.
DesignVerdict is_t_design(const PointSet& ps, int t, double tol = 1e-8);

/// Equivalent moment form: for 1 <= k <= t and every y,
/// (1/|X|) sum_x (x, y)^k equals the k-th weight moment. Same tolerance
/// convention on the mean. Mutual oracle for is_t_design.
DesignVerdict averaging_check(const PointSet& ps, int t, double tol = 1e-8);

/// Tightness certificate per the angle-set characterization: a t-design has
/// t <= s + e; it is tight iff t_max = s + e and |X| equals the bound, and
/// then every angle annihilates xi^eps * R_e^eps(xi).
struct TightnessCertificate {
  int s = 0, e = 0, eps = 0;     // from the angle set
  int t_max = 0;                 // largest verified strength (capped at s + e)
  Rational bound;                // cardinality bound for t = s + e
  bool cardinality_match = false;
  bool angles_annihilate = false;
  bool tight = false;
  RationalPolynomial annihilator;  // xi^eps * R_e^eps(xi)
  std::vector<RealScalar> angles;
};

/// Requires ps to be a t-design (throws std::invalid_argument otherwise).
/// Exact backends check annihilation exactly; float backends within tol.
TightnessCertificate tightness(const PointSet& ps, int t, double tol = 1e-9);

/// The 12-point tight 5-design in CP^1 over the order-5 cyclotomic backend.
PointSet construct_cp1_5design();

/// The (2t+2)-gon image in RP^1: t+1 points (cos(k*pi/(t+1)), sin(k*pi/(t+1)))
/// over an exact cyclotomic backend; a tight t-design.
PointSet construct_rp1_polygon(int t);

/// True iff the polygon design's angle set is rational: euler_phi(t+1) <= 2,
/// i.e. t in {1, 2, 3, 5}.
bool rp1_rational(int t);

}  // namespace projdes
