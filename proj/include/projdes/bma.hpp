#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projdes/designs.hpp"
#include "projdes/jacobi.hpp"
#include "projdes/point_set.hpp"
#include "projdes/scalar_matrix.hpp"

namespace projdes {

/// The matrix algebra attached to a t-design X:
///   M_i = [P_i((x, y))] for i = 0..s,   s = floor((t+1)/2),
///   Delta_c = zero-one indicator of each Gram-value class (diagonal last),
///   L_i = M_i / (rho_i |X|)  with  M_i M_k = |X| delta_ik rho_i M_i.
/// rho_i = chi_i for i <= floor(t/2); for odd t the top scale comes from
/// traces: lambda_s = tr M_s / tr M_s^2 and rho_s = 1 / (lambda_s |X|).
struct BoseMesnerAlgebra {
  DesignParams params;
  int size = 0;
  bool exact = false;

  std::vector<RealScalar> angles;   // distinct off-diagonal Gram values, ascending
  std::vector<int> class_of;        // size*size -> Delta index; diagonal class last
  std::vector<ScalarMatrix> M;      // s + 1 matrices
  std::vector<ScalarMatrix> Delta;  // |angles| + 1 indicator matrices
  std::vector<RealScalar> rho;      // s + 1 scale constants
  std::vector<Rational> chi;        // closed forms for i = 0..floor(t/2)
  std::optional<RealScalar> lambda_s;  // odd t only
  std::vector<ScalarMatrix> L;      // s + 1 idempotent candidates
  std::vector<RealScalar> traces;   // trace L_i
  std::vector<int> ranks;           // matrix_rank(L_i)
};

/// Requires ps to verify as a t-design (throws std::invalid_argument
/// otherwise). Exact backends build exact matrices; float backends carry
/// doubles throughout and use tol for the design check.
BoseMesnerAlgebra build_algebra(const PointSet& ps, int t, double tol = 1e-8);

struct MultTableReport {
  bool ok = false;
  double max_residual = 0.0;
  struct Violation {
    int i = -1, k = -1, x = -1, y = -1;
  };
  std::optional<Violation> witness;  // first violated entry
};

/// Checks M_i M_k = |X| delta_ik rho_i M_i for every pair, exactly on exact
/// backends and within |X| * tol entrywise otherwise.
MultTableReport verify_mult_table(const BoseMesnerAlgebra& alg, double tol = 1e-8);

struct IdempotentReport {
  bool ok = false;
  std::vector<std::string> failures;  // violated identities by name
  double max_residual = 0.0;
  int rank_sum = 0;
};

/// Checks L_i L_k = delta_ik L_i, sum L_i = I, trace L_i = rank L_i, rank
/// agreement with the closed forms (rank_closed for i <= floor(t/2),
/// rank_last for i = s at odd t), and sum of ranks = |X|.
IdempotentReport verify_idempotents(const BoseMesnerAlgebra& alg, double tol = 1e-8);

/// Coordinates of mat in the Delta basis: one value per Gram-value class,
/// diagonal class last. Empty when mat is not constant on some class.
std::optional<std::vector<RealScalar>> delta_coordinates(const BoseMesnerAlgebra& alg,
                                                         const ScalarMatrix& mat,
                                                         double tol = 1e-8);

/// The series idempotent candidate E_s has trace Q_s(1) given by the same
/// closed form as rank_closed at i = s, while the design idempotent L_s has
/// rank rank_last. They agree only if E_s could be an idempotent.
struct ETraceComparison {
  Rational q_s_at_1;
  Rational rank_ls;
  bool differs = false;
};

/// Requires odd t (throws std::domain_error otherwise).
ETraceComparison e_trace_comparison(const DesignParams& p);

}  // namespace projdes
