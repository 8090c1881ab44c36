#include "projdes/designs.hpp"

#include <cmath>
#include <stdexcept>

namespace projdes {

namespace {

DegreeResidual degree_residual_from_sums(int degree, bool exact, const std::vector<RealScalar>& sums,
                                         double threshold) {
  DegreeResidual r;
  r.degree = degree;
  r.exact = exact;
  if (exact) {
    r.zero = true;
    for (const RealScalar& s : sums) {
      if (!s.is_zero()) {
        r.zero = false;
        r.residual = std::max(r.residual, s.abs_double());
      }
    }
  } else {
    for (const RealScalar& s : sums) r.residual = std::max(r.residual, s.abs_double());
    r.zero = r.residual <= threshold;
  }
  return r;
}

}  // namespace

DesignVerdict is_t_design(const PointSet& ps, int t, double tol) {
  DesignParams params(ps.field(), ps.n(), t);
  GramMatrix g = gram(ps);
  const int count = g.size();

  DesignVerdict v;
  v.t_checked = t;
  v.is_design = true;
  for (int i = 1; i <= t; ++i) {
    RationalPolynomial P = shifted_P(params, i);
    std::vector<RealScalar> sums;
    sums.reserve(count);
    for (int y = 0; y < count; ++y) {
      RealScalar acc = g.exact() ? RealScalar(Rational(0)) : RealScalar(0.0);
      for (int x = 0; x < count; ++x) acc += P.eval(g.at(x, y));
      sums.push_back(std::move(acc));
    }
    DegreeResidual r = degree_residual_from_sums(i, g.exact(), sums, count * tol);
    v.is_design = v.is_design && r.zero;
    v.residuals.push_back(r);
  }
  return v;
}

DesignVerdict averaging_check(const PointSet& ps, int t, double tol) {
  DesignParams params(ps.field(), ps.n(), t);
  GramMatrix g = gram(ps);
  const int count = g.size();
  const Rational size_rat(static_cast<long>(count));

  // Entry-wise powers of the Gram matrix, raised degree by degree.
  std::vector<RealScalar> powers(static_cast<size_t>(count) * count);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) powers[i * count + j] = g.at(i, j);

  DesignVerdict v;
  v.t_checked = t;
  v.is_design = true;
  for (int k = 1; k <= t; ++k) {
    if (k > 1)
      for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) powers[i * count + j] *= g.at(i, j);
    Rational mu = weight_moment(params, k);
    std::vector<RealScalar> deviations;
    deviations.reserve(count);
    for (int y = 0; y < count; ++y) {
      RealScalar acc = g.exact() ? RealScalar(Rational(0)) : RealScalar(0.0);
      for (int x = 0; x < count; ++x) acc += powers[x * count + y];
      RealScalar expected = g.exact() ? RealScalar(mu * size_rat) : RealScalar(mu.to_double() * count);
      deviations.push_back(acc - expected);
    }
    // Deviation of the mean, so scale the sum deviation by 1/|X|.
    DegreeResidual r;
    r.degree = k;
    r.exact = g.exact();
    if (g.exact()) {
      r.zero = true;
      for (const RealScalar& d : deviations)
        if (!d.is_zero()) {
          r.zero = false;
          r.residual = std::max(r.residual, d.abs_double() / count);
        }
    } else {
      for (const RealScalar& d : deviations) r.residual = std::max(r.residual, d.abs_double() / count);
      r.zero = r.residual <= tol;
    }
    v.is_design = v.is_design && r.zero;
    v.residuals.push_back(r);
  }
  return v;
}

TightnessCertificate tightness(const PointSet& ps, int t, double tol) {
  DesignVerdict base = is_t_design(ps, t);
  if (!base.is_design)
    throw std::invalid_argument("tightness requires a verified t-design (strength " +
                                std::to_string(t) + " failed)");

  GramMatrix g = gram(ps);
  AngleSet A = angle_set(g, tol);

  TightnessCertificate cert;
  cert.s = A.s;
  cert.e = A.e;
  cert.eps = A.eps;
  cert.angles = A.values;

  const int t_cap = A.s + A.e;
  DesignParams params_cap(ps.field(), ps.n(), t_cap);
  DesignVerdict extended = is_t_design(ps, t_cap);
  cert.t_max = 0;
  for (const DegreeResidual& r : extended.residuals) {
    if (!r.zero) break;
    cert.t_max = r.degree;
  }

  cert.bound = design_bound(params_cap);
  cert.cardinality_match = Rational(static_cast<long>(ps.size())) == cert.bound;

  cert.annihilator = R_poly(params_cap) * RationalPolynomial::monomial(Rational(1), cert.eps, PolyVar::xi);
  cert.angles_annihilate = true;
  for (const RealScalar& a : cert.angles) {
    RealScalar val = cert.annihilator.eval(a);
    bool ok = val.is_exact() ? val.is_zero() : std::fabs(val.to_double()) <= tol;
    cert.angles_annihilate = cert.angles_annihilate && ok;
  }

  cert.tight = cert.t_max == t_cap && cert.cardinality_match && cert.angles_annihilate;
  return cert;
}

PointSet construct_cp1_5design() {
  const long order = 5;
  Cyclotomic eta = Cyclotomic::root_of_unity(order, 1);
  Cyclotomic lambda = eta + Cyclotomic::root_of_unity(order, 4);
  Cyclotomic one(order, Rational(1));

  if (!(lambda * lambda + lambda - one).is_zero())
    throw std::logic_error("cp1 construction: lambda^2 + lambda - 1 != 0");
  Cyclotomic two_minus = Cyclotomic(order, Rational(2)) - lambda;
  Cyclotomic three_plus = Cyclotomic(order, Rational(3)) + lambda;
  for (long r = 0; r < order; ++r) {
    Cyclotomic d = Cyclotomic::root_of_unity(order, r) - one;
    Cyclotomic a2 = d.abs2();
    if (!(a2.is_zero() || a2 == two_minus || a2 == three_plus))
      throw std::logic_error("cp1 construction: unexpected |eta^r - 1|^2");
  }

  PointSet::CycloPoints pts;
  Cyclotomic zero(order);
  pts.push_back({one, zero});
  pts.push_back({zero, one});
  for (long j = 0; j < 5; ++j)
    pts.push_back({lambda * Cyclotomic::root_of_unity(order, j), one});
  for (long j = 0; j < 5; ++j)
    pts.push_back({Cyclotomic::root_of_unity(order, j), -lambda});
  return PointSet(Field::C, 1, std::move(pts));
}

PointSet construct_rp1_polygon(int t) {
  if (t < 1) throw std::domain_error("polygon strength t must be >= 1");
  // sin(k*pi/(t+1)) needs i = omega^(order/4) in the field, so the order must
  // be divisible by 4: 2(t+1) works for odd t, 4(t+1) for even t.
  const long order = (t % 2 == 1) ? 2L * (t + 1) : 4L * (t + 1);
  const long step = (t % 2 == 1) ? 1 : 2;
  Cyclotomic i_unit = Cyclotomic::root_of_unity(order, order / 4);
  Rational half(1, 2);

  PointSet::CycloPoints pts;
  for (int k = 0; k <= t; ++k) {
    Cyclotomic w = Cyclotomic::root_of_unity(order, step * k);
    Cyclotomic winv = Cyclotomic::root_of_unity(order, -step * k);
    Cyclotomic cos_k = (w + winv) * half;
    Cyclotomic sin_k = i_unit * (w - winv) * (-half);
    if (!(cos_k * cos_k + sin_k * sin_k).is_one())
      throw std::logic_error("polygon construction: representative not unit length");
    pts.push_back({cos_k, sin_k});
  }
  return PointSet(Field::R, 1, std::move(pts));
}

bool rp1_rational(int t) {
  if (t < 1) throw std::domain_error("rp1_rational requires t >= 1");
  return euler_phi(t + 1) <= 2;
}

}  // namespace projdes
