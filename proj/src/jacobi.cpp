#include "projdes/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace projdes {

const char* field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

std::optional<Field> field_from_name(const std::string& name) {
  if (name == "R") return Field::R;
  if (name == "C") return Field::C;
  if (name == "H") return Field::H;
  return std::nullopt;
}

DesignParams::DesignParams(Field field_, int n_, int t_) : field(field_), n(n_), t(t_) {
  if (n < 1) throw std::domain_error("projective dimension n must be >= 1");
  if (t < 1) throw std::domain_error("design strength t must be >= 1");
  switch (field) {
    case Field::R: m = Rational(1, 2); break;
    case Field::C: m = Rational(1); break;
    case Field::H: m = Rational(2); break;
  }
  N = m * Rational(n + 1);
  alpha = N - m - Rational(1);
  beta = m - Rational(1);
  s = (t + 1) / 2;
  e = t / 2;
  eps = t % 2;
}

RationalPolynomial jacobi_poly(const Rational& alpha, const Rational& beta, int i) {
  if (i < 0) throw std::domain_error("jacobi_poly degree must be >= 0");
  if (alpha <= Rational(-1) || beta <= Rational(-1))
    throw std::domain_error("jacobi_poly requires alpha > -1 and beta > -1");

  RationalPolynomial p0 = RationalPolynomial::constant(Rational(1), PolyVar::tau);
  if (i == 0) return p0;
  Rational half(1, 2);
  RationalPolynomial p1({(alpha - beta) * half, (alpha + beta + Rational(2)) * half}, PolyVar::tau);
  if (i == 1) return p1;

  // Three-term recurrence; all denominators are positive for k >= 2 because
  // alpha + beta > -2.
  for (int k = 2; k <= i; ++k) {
    Rational kk(k);
    Rational ab = alpha + beta;
    Rational c0 = Rational(2) * kk * (kk + ab) * (Rational(2) * kk + ab - Rational(2));
    Rational c1 = Rational(2) * kk + ab - Rational(1);
    Rational c2 = (Rational(2) * kk + ab) * (Rational(2) * kk + ab - Rational(2));
    Rational c3 = alpha * alpha - beta * beta;
    Rational c4 = Rational(2) * (kk + alpha - Rational(1)) * (kk + beta - Rational(1)) *
                  (Rational(2) * kk + ab);
    RationalPolynomial lin({c1 * c3, c1 * c2}, PolyVar::tau);
    RationalPolynomial next = (lin * p1 - p0.scaled(c4)).scaled(c0.inverse());
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

RationalPolynomial shifted_P(const DesignParams& p, int i) {
  return jacobi_poly(p.alpha, p.beta, i).compose_affine(Rational(2), Rational(-1), PolyVar::xi);
}

RationalPolynomial R_poly(const DesignParams& p) {
  RationalPolynomial base = jacobi_poly(p.alpha + Rational(1), p.beta + Rational(p.eps), p.e)
                                .compose_affine(Rational(2), Rational(-1), PolyVar::xi);
  Rational scale = pochhammer(p.N, p.s) / pochhammer(p.m, p.s);
  return base.scaled(scale);
}

Rational weight_moment(const DesignParams& p, int k) {
  if (k < 0) throw std::domain_error("weight_moment requires k >= 0");
  return pochhammer(p.beta + Rational(1), k) / pochhammer(p.alpha + p.beta + Rational(2), k);
}

Rational integrate_poly(const DesignParams& p, const RationalPolynomial& poly) {
  if (poly.var() != PolyVar::xi)
    throw std::domain_error("integrate_poly expects a xi-domain polynomial");
  Rational acc(0);
  for (int k = 0; k <= poly.degree(); ++k) {
    if (poly.coeff(k).is_zero()) continue;
    acc += poly.coeff(k) * weight_moment(p, k);
  }
  return acc;
}

Rational chi(const DesignParams& p, int i) {
  RationalPolynomial P = shifted_P(p, i);
  Rational at_one = P.eval(Rational(1));
  return integrate_poly(p, P * P) / at_one;
}

Rational rank_closed(const DesignParams& p, int i) {
  if (i < 0) throw std::domain_error("rank_closed requires i >= 0");
  // (N)_{i-1} * (N+2i-1) as a unit when i = 0: (gamma-1)(gamma)_{-1} = 1.
  Rational lead = i == 0 ? Rational(1)
                         : pochhammer(p.N, i - 1) * (p.N + Rational(2L * i - 1));
  return lead * pochhammer(p.N - p.m, i) / (pochhammer(p.m, i) * factorial(i));
}

Rational rank_last(const DesignParams& p) {
  if (p.eps != 1) throw std::domain_error("rank_last requires odd t");
  return pochhammer(p.N, p.s - 1) * pochhammer(p.N - p.m, p.s) /
         (pochhammer(p.m, p.s) * factorial(p.s - 1));
}

Rational design_bound(const DesignParams& p) {
  Rational b = pochhammer(p.N, p.s) * pochhammer(p.N - p.m + Rational(1), p.e) /
               (pochhammer(p.m, p.s) * factorial(p.e));
  if (!b.is_integer() || b.sign() <= 0)
    throw std::logic_error("design bound expected to be a positive integer, got " + b.str());
  return b;
}

namespace {

double refine_root(const RationalPolynomial& r, const RationalPolynomial& dr, double lo, double hi,
                   double flo, double tol) {
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double fmid = r.eval(mid);
    if (fmid == 0.0) return mid;
    if ((flo < 0) == (fmid < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    double d = dr.eval(x);
    if (d == 0.0) break;
    double step = r.eval(x) / d;
    double nx = x - step;
    if (nx <= lo || nx >= hi) break;
    x = nx;
    if (std::fabs(step) < 1e-17) break;
  }
  return x;
}

}  // namespace

TightAngleSet tight_angle_set(const DesignParams& p, double tol) {
  TightAngleSet out;
  bool want_exact = p.e <= 2;
  if (p.eps == 1) {
    out.roots.push_back(0.0);
    if (want_exact) out.exact_roots.push_back(ExactQuadratic{Rational(0), Rational(0), 0});
  }
  if (p.e == 0) return out;

  RationalPolynomial r = R_poly(p);
  RationalPolynomial dr = r.derivative();
  const int kSamples = 512;
  std::vector<double> found;
  double prev_x = 0.0, prev_f = r.eval(0.0);
  for (int j = 1; j <= kSamples + 1; ++j) {
    double x = static_cast<double>(j) / (kSamples + 1);
    double f = r.eval(x);
    if (f == 0.0) {
      found.push_back(x);
    } else if (prev_f != 0.0 && (prev_f < 0) != (f < 0)) {
      found.push_back(refine_root(r, dr, prev_x, x, prev_f, tol));
    }
    prev_x = x;
    prev_f = f;
  }
  if (static_cast<int>(found.size()) != p.e)
    throw std::logic_error("tight_angle_set: expected " + std::to_string(p.e) + " interior roots, found " +
                           std::to_string(found.size()));
  out.roots.insert(out.roots.end(), found.begin(), found.end());
  std::sort(out.roots.begin(), out.roots.end());

  if (want_exact) {
    if (p.e == 1) {
      Rational root = -r.coeff(0) / r.coeff(1);
      out.exact_roots.push_back(ExactQuadratic{root, Rational(0), 0});
    } else if (p.e == 2) {
      Rational a = r.coeff(2), b = r.coeff(1), c = r.coeff(0);
      Rational disc = b * b - Rational(4) * a * c;
      auto [f, d] = rational_sqrt_decompose(disc);
      Rational center = -b / (Rational(2) * a);
      Rational spread = (f / (Rational(2) * a)).abs();
      if (d <= 1) {  // perfect-square discriminant: two rational roots
        Rational lo = center - spread * Rational(d), hi = center + spread * Rational(d);
        out.exact_roots.push_back(ExactQuadratic{lo, Rational(0), 0});
        out.exact_roots.push_back(ExactQuadratic{hi, Rational(0), 0});
      } else {
        out.exact_roots.push_back(ExactQuadratic{center, -spread, d});
        out.exact_roots.push_back(ExactQuadratic{center, spread, d});
      }
    }
  }
  return out;
}

}  // namespace projdes
