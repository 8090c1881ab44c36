#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projdes/polynomial.hpp"
#include "projdes/rational.hpp"
#include "projdes/real_scalar.hpp"

namespace projdes {

/// Base field of the projective space: real, complex or quaternionic.
enum class Field { R, C, H };

const char* field_name(Field f);
std::optional<Field> field_from_name(const std::string& name);

/// Parameters of FP^n with a target strength t. Derived quantities:
///   m = (F:R)/2 in {1/2, 1, 2},  N = m(n+1),
///   alpha = N - m - 1,  beta = m - 1,
///   s = floor((t+1)/2), e = floor(t/2), eps = t mod 2.
struct DesignParams {
  Field field;
  int n = 1;
  int t = 1;
  Rational m, N, alpha, beta;
  int s = 0, e = 0, eps = 0;

  DesignParams(Field field, int n, int t);
};

/// Jacobi polynomial P_i^(alpha,beta) in tau, normalized so that
/// P_i(1) = (alpha+1)_i / i!. Requires alpha > -1 and beta > -1.
RationalPolynomial jacobi_poly(const Rational& alpha, const Rational& beta, int i);

/// P_i^(alpha,beta)(2*xi - 1): the same polynomial moved to the xi domain.
RationalPolynomial shifted_P(const DesignParams& p, int i);

/// R_e^eps(xi) = ((N)_s / (m)_s) * P_e^(alpha+1, beta+eps)(2*xi - 1).
/// Satisfies R_e^eps(1) = (N)_s (N-m+1)_e / ((m)_s e!).
RationalPolynomial R_poly(const DesignParams& p);

/// k-th moment of xi under the invariant measure: (beta+1)_k / (alpha+beta+2)_k.
Rational weight_moment(const DesignParams& p, int k);

/// Exact integral of a xi-domain polynomial against the invariant measure.
Rational integrate_poly(const DesignParams& p, const RationalPolynomial& poly);

/// chi_i = integrate(P_i^2) / P_i(1); the spherical-function eigenvalue scale.
Rational chi(const DesignParams& p, int i);

/// Closed-form rank (N)_{i-1} (N-m)_i (N+2i-1) / ((m)_i i!). For i = 0 the
/// leading pair (N)_{-1}(N-1) is taken as 1 (valid for every N), giving 1.
Rational rank_closed(const DesignParams& p, int i);

/// Closed-form rank of the top component for odd t = 2s-1:
/// (N)_{s-1} (N-m)_s / ((m)_s (s-1)!). Throws std::domain_error for even t.
Rational rank_last(const DesignParams& p);

/// Cardinality bound (N)_s (N-m+1)_e / ((m)_s e!); always a positive integer
/// for valid parameters (asserted).
Rational design_bound(const DesignParams& p);

/// Roots of xi^eps * R_e^eps(xi): zero (when eps = 1) plus the e simple roots
/// of R in (0, 1). `roots` is sorted ascending; `exact_roots` is populated in
/// the same order when e <= 2 (rational/quadratic closed forms).
struct TightAngleSet {
  std::vector<double> roots;
  std::vector<ExactQuadratic> exact_roots;
};

/// Bisection (512 initial samples, refined to `tol`) plus Newton polish.
/// Throws std::logic_error if the sign-change count differs from e.
TightAngleSet tight_angle_set(const DesignParams& p, double tol = 1e-13);

}  // namespace projdes
