#include "projdes/bma.hpp"

#include <cmath>
#include <stdexcept>

namespace projdes {

namespace {

RealScalar zero_like(bool exact) { return exact ? RealScalar(Rational(0)) : RealScalar(0.0); }
RealScalar one_like(bool exact) { return exact ? RealScalar(Rational(1)) : RealScalar(1.0); }

int classify_entry(const std::vector<RealScalar>& angles, const RealScalar& v, bool exact,
                   double tol) {
  if (exact) {
    for (size_t c = 0; c < angles.size(); ++c)
      if (angles[c] == v) return static_cast<int>(c);
  } else {
    double dv = v.to_double();
    int best = -1;
    double best_d = tol;
    for (size_t c = 0; c < angles.size(); ++c) {
      double d = std::fabs(angles[c].to_double() - dv);
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(c);
      }
    }
    if (best >= 0) return best;
  }
  throw std::logic_error("gram entry matches no angle class");
}

}  // namespace

BoseMesnerAlgebra build_algebra(const PointSet& ps, int t, double tol) {
  DesignVerdict v = is_t_design(ps, t, tol);
  if (!v.is_design)
    throw std::invalid_argument("algebra requires a verified t-design (strength " +
                                std::to_string(t) + " failed)");

  BoseMesnerAlgebra alg{DesignParams(ps.field(), ps.n(), t)};
  alg.size = ps.size();
  alg.exact = ps.exact();

  GramMatrix g = gram(ps);
  AngleSet A = angle_set(g);
  alg.angles = A.values;

  const int n = alg.size;
  const int diag_class = static_cast<int>(alg.angles.size());
  alg.class_of.assign(static_cast<size_t>(n) * n, diag_class);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        alg.class_of[i * n + j] = classify_entry(alg.angles, g.at(i, j), alg.exact, 1e-9);

  alg.Delta.assign(diag_class + 1, ScalarMatrix(n, zero_like(alg.exact)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      alg.Delta[alg.class_of[i * n + j]].at(i, j) = one_like(alg.exact);

  for (int i = 0; i <= alg.params.s; ++i) {
    RationalPolynomial P = shifted_P(alg.params, i);
    ScalarMatrix Mi(n, zero_like(alg.exact));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) Mi.at(x, y) = P.eval(g.at(x, y));
    alg.M.push_back(std::move(Mi));
  }

  for (int i = 0; i <= alg.params.e; ++i) alg.chi.push_back(chi(alg.params, i));
  for (int i = 0; i <= alg.params.e; ++i)
    alg.rho.push_back(alg.exact ? RealScalar(alg.chi[i]) : RealScalar(alg.chi[i].to_double()));
  if (alg.params.eps == 1) {
    const ScalarMatrix& Ms = alg.M[alg.params.s];
    RealScalar tr = Ms.trace();
    RealScalar tr_sq = (Ms * Ms).trace();
    bool sq_zero = tr_sq.is_exact() ? tr_sq.is_zero() : tr_sq.to_double() == 0.0;
    if (sq_zero) throw std::logic_error("tr M_s^2 vanished on a nonempty design");
    alg.lambda_s = tr / tr_sq;
    alg.rho.push_back(one_like(alg.exact) / (*alg.lambda_s * RealScalar(Rational(n))));
  }

  for (int i = 0; i <= alg.params.s; ++i) {
    RealScalar scale = one_like(alg.exact) / (alg.rho[i] * RealScalar(Rational(n)));
    alg.L.push_back(alg.M[i].scaled(scale));
    alg.traces.push_back(alg.L.back().trace());
    alg.ranks.push_back(matrix_rank(alg.L.back()));
  }
  return alg;
}

MultTableReport verify_mult_table(const BoseMesnerAlgebra& alg, double tol) {
  MultTableReport rep;
  rep.ok = true;
  const int n = alg.size;
  const double threshold = n * tol;
  for (size_t i = 0; i < alg.M.size(); ++i) {
    for (size_t k = 0; k < alg.M.size(); ++k) {
      ScalarMatrix prod = alg.M[i] * alg.M[k];
      ScalarMatrix expected =
          i == k ? alg.M[i].scaled(alg.rho[i] * RealScalar(Rational(n)))
                 : ScalarMatrix(n, zero_like(alg.exact));
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          RealScalar d = prod.at(x, y) - expected.at(x, y);
          bool entry_ok = d.is_exact() ? d.is_zero() : d.abs_double() <= threshold;
          if (!d.is_exact() || !entry_ok)
            rep.max_residual = std::max(rep.max_residual, d.abs_double());
          if (!entry_ok) {
            if (rep.ok) rep.witness = MultTableReport::Violation{static_cast<int>(i),
                                                                 static_cast<int>(k), x, y};
            rep.ok = false;
          }
        }
    }
  }
  return rep;
}

IdempotentReport verify_idempotents(const BoseMesnerAlgebra& alg, double tol) {
  IdempotentReport rep;
  rep.ok = true;
  const int n = alg.size;
  const double threshold = n * tol;
  auto matrices_close = [&](const ScalarMatrix& a, const ScalarMatrix& b) {
    if (alg.exact) return a == b;
    double d = a.max_abs_diff(b);
    rep.max_residual = std::max(rep.max_residual, d);
    return d <= threshold;
  };
  auto fail = [&](const std::string& name) {
    rep.ok = false;
    rep.failures.push_back(name);
  };

  for (size_t i = 0; i < alg.L.size(); ++i)
    for (size_t k = i; k < alg.L.size(); ++k) {
      ScalarMatrix prod = alg.L[i] * alg.L[k];
      const ScalarMatrix expected =
          i == k ? alg.L[i] : ScalarMatrix(n, zero_like(alg.exact));
      if (!matrices_close(prod, expected))
        fail(i == k ? "L" + std::to_string(i) + "^2 != L" + std::to_string(i)
                    : "L" + std::to_string(i) + "*L" + std::to_string(k) + " != 0");
    }

  ScalarMatrix sum(n, zero_like(alg.exact));
  for (const ScalarMatrix& Li : alg.L) sum = sum + Li;
  if (!matrices_close(sum, ScalarMatrix::identity(n, alg.exact))) fail("sum(L) != I");

  for (size_t i = 0; i < alg.L.size(); ++i) {
    const RealScalar& tr = alg.traces[i];
    bool trace_matches;
    if (tr.is_exact()) {
      auto r = tr.rational_value();
      trace_matches = r && *r == Rational(static_cast<long>(alg.ranks[i]));
    } else {
      double d = std::fabs(tr.to_double() - alg.ranks[i]);
      rep.max_residual = std::max(rep.max_residual, d);
      trace_matches = d <= threshold;
    }
    if (!trace_matches) fail("trace(L" + std::to_string(i) + ") != rank");

    Rational expected_rank =
        (static_cast<int>(i) <= alg.params.e) ? rank_closed(alg.params, static_cast<int>(i))
                                              : rank_last(alg.params);
    if (Rational(static_cast<long>(alg.ranks[i])) != expected_rank)
      fail("rank(L" + std::to_string(i) + ") != closed form");
  }

  rep.rank_sum = 0;
  for (int r : alg.ranks) rep.rank_sum += r;
  if (rep.rank_sum != n) fail("sum of ranks != |X|");
  return rep;
}

std::optional<std::vector<RealScalar>> delta_coordinates(const BoseMesnerAlgebra& alg,
                                                         const ScalarMatrix& mat,
                                                         double tol) {
  const int n = alg.size;
  if (mat.size() != n) throw std::domain_error("matrix size mismatch");
  const int classes = static_cast<int>(alg.Delta.size());
  std::vector<RealScalar> coord(classes, zero_like(alg.exact));
  std::vector<bool> seen(classes, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = alg.class_of[i * n + j];
      const RealScalar& v = mat.at(i, j);
      if (!seen[c]) {
        coord[c] = v;
        seen[c] = true;
      } else {
        bool same = alg.exact ? coord[c] == v
                              : std::fabs(coord[c].to_double() - v.to_double()) <= tol;
        if (!same) return std::nullopt;
      }
    }
  return coord;
}

ETraceComparison e_trace_comparison(const DesignParams& p) {
  if (p.eps != 1) throw std::domain_error("trace comparison needs odd t");
  ETraceComparison out;
  out.q_s_at_1 = rank_closed(p, p.s);
  out.rank_ls = rank_last(p);
  out.differs = out.q_s_at_1 != out.rank_ls;
  return out;
}

}  // namespace projdes
