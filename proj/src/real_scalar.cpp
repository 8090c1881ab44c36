#include "projdes/real_scalar.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace projdes {

double ExactQuadratic::value() const {
  return p.to_double() + q.to_double() * std::sqrt(static_cast<double>(disc));
}

std::string ExactQuadratic::str() const {
  if (is_rational()) return p.str();
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), p.denominator().get_mpz_t(), q.denominator().get_mpz_t());
  Rational scale{den};
  mpz_class a = (p * scale).numerator();
  mpz_class b = (q * scale).numerator();
  std::string root = "sqrt" + std::to_string(disc);
  std::string body;
  mpz_class babs = ::abs(b);
  std::string bterm = (babs == 1 ? root : babs.get_str() + "*" + root);
  if (a == 0) {
    body = (b < 0 ? "-" : "") + bterm;
  } else {
    body = a.get_str() + (b < 0 ? "-" : "+") + bterm;
  }
  if (den == 1) return a == 0 ? body : "(" + body + ")";
  return "(" + body + ")/" + den.get_str();
}

RealScalar::RealScalar(const Cyclotomic& z) {
  if (auto r = z.rational_value()) {
    v_ = *r;
    return;
  }
  if (!z.is_real())
    throw std::domain_error("real scalar constructed from non-real cyclotomic: " + z.str());
  v_ = z;
}

bool RealScalar::is_zero() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
  if (const auto* z = std::get_if<Cyclotomic>(&v_)) return z->is_zero();
  return std::get<double>(v_) == 0.0;
}

double RealScalar::to_double() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->to_double();
  if (const auto* z = std::get_if<Cyclotomic>(&v_)) return z->embed().real();
  return std::get<double>(v_);
}

double RealScalar::abs_double() const { return std::fabs(to_double()); }

std::optional<Rational> RealScalar::rational_value() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  return std::nullopt;
}

namespace {

enum class Kind { rational, cyclo, real64 };

Kind kind_of(const RealScalar& s) {
  if (!s.is_exact()) return Kind::real64;
  return s.rational_value() ? Kind::rational : Kind::cyclo;
}

Cyclotomic as_cyclo(const RealScalar& s, long order) {
  if (const Cyclotomic* z = s.cyclotomic_value()) return *z;
  return Cyclotomic(order, *s.rational_value());
}

template <class RatOp, class CycOp, class DblOp>
RealScalar combine(const RealScalar& a, const RealScalar& b, RatOp rop, CycOp cop, DblOp dop) {
  if (!a.is_exact() || !b.is_exact()) return RealScalar(dop(a.to_double(), b.to_double()));
  if (kind_of(a) == Kind::rational && kind_of(b) == Kind::rational)
    return RealScalar(rop(*a.rational_value(), *b.rational_value()));
  long order = a.cyclotomic_value() ? a.cyclotomic_value()->order() : b.cyclotomic_value()->order();
  return RealScalar(cop(as_cyclo(a, order), as_cyclo(b, order)));
}

}  // namespace

RealScalar operator+(const RealScalar& a, const RealScalar& b) {
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return x + y; },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x + y; },
      [](double x, double y) { return x + y; });
}

RealScalar operator-(const RealScalar& a, const RealScalar& b) {
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return x - y; },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x - y; },
      [](double x, double y) { return x - y; });
}

RealScalar operator*(const RealScalar& a, const RealScalar& b) {
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return x * y; },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x * y; },
      [](double x, double y) { return x * y; });
}

RealScalar operator/(const RealScalar& a, const RealScalar& b) {
  if (b.is_exact() && b.is_zero()) throw std::domain_error("real scalar division by zero");
  return combine(
      a, b, [](const Rational& x, const Rational& y) { return x / y; },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x / y; },
      [](double x, double y) { return x / y; });
}

RealScalar RealScalar::operator-() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return RealScalar(-*r);
  if (const auto* z = std::get_if<Cyclotomic>(&v_)) return RealScalar(-*z);
  return RealScalar(-std::get<double>(v_));
}

RealScalar RealScalar::pow(long k) const {
  if (k < 0) throw std::domain_error("real scalar pow with negative exponent");
  RealScalar acc(Rational(1)), base = *this;
  for (long e = k; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

bool operator==(const RealScalar& a, const RealScalar& b) {
  Kind ka = kind_of(a), kb = kind_of(b);
  if (ka == Kind::real64 || kb == Kind::real64)
    return ka == kb && a.float_value() == b.float_value();
  if (ka != kb) return false;  // canonical: a rational never hides in the cyclo variant
  if (ka == Kind::rational) return *a.rational_value() == *b.rational_value();
  return *a.cyclotomic_value() == *b.cyclotomic_value();
}

std::string RealScalar::str() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->str();
  if (const auto* z = std::get_if<Cyclotomic>(&v_)) {
    if (auto quad = quadratic_form(*z)) return quad->str();
    return z->str() + " [z=zeta_" + std::to_string(z->order()) + "]";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", std::get<double>(v_));
  return buf;
}

bool approx_equal(const RealScalar& a, const RealScalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::fabs(a.to_double() - b.to_double()) <= tol;
}

bool approx_less(const RealScalar& a, const RealScalar& b) { return a.to_double() < b.to_double(); }

namespace {

// Removes square factors below the trial-division bound; returns {f, d}
// with input = f^2 * d.
std::pair<mpz_class, mpz_class> squarefree_split(mpz_class n) {
  mpz_class f = 1;
  if (n == 0) return {f, n};
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return {r, mpz_class(1)};
  }
  for (long p = 2; p <= 100000 && mpz_class(p) * p <= n; ++p) {
    mpz_class sq = mpz_class(p) * p;
    while (mpz_divisible_p(n.get_mpz_t(), sq.get_mpz_t())) {
      n /= sq;
      f *= p;
    }
  }
  return {f, n};
}

}  // namespace

std::pair<Rational, long> rational_sqrt_decompose(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("square root of negative rational");
  if (x.is_zero()) return {Rational(0), 0};
  mpz_class radicand = x.numerator() * x.denominator();
  auto [f, d] = squarefree_split(radicand);
  if (!d.fits_slong_p()) throw std::domain_error("radicand too large to decompose");
  return {Rational(f) / Rational(x.denominator()), d.get_si()};
}

std::optional<ExactQuadratic> quadratic_form(const Cyclotomic& z) {
  if (auto r = z.rational_value()) return ExactQuadratic{*r, Rational(0), 0};

  long m = z.order();
  std::vector<Cyclotomic> orbit;
  for (long k = 1; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    Cyclotomic img = z.galois(k);
    bool seen = false;
    for (const Cyclotomic& o : orbit)
      if (o == img) {
        seen = true;
        break;
      }
    if (!seen) {
      orbit.push_back(std::move(img));
      if (orbit.size() > 2) return std::nullopt;
    }
  }
  if (orbit.size() != 2) return std::nullopt;

  // z satisfies x^2 - T x + P with rational trace and norm.
  auto trace = (orbit[0] + orbit[1]).rational_value();
  auto norm = (orbit[0] * orbit[1]).rational_value();
  if (!trace || !norm) return std::nullopt;
  Rational disc_rat = *trace * *trace - Rational(4) * *norm;
  if (disc_rat.sign() <= 0) return std::nullopt;  // non-real or degenerate

  // sqrt(num/den) = sqrt(num*den)/den; pull out square factors.
  mpz_class radicand = disc_rat.numerator() * disc_rat.denominator();
  auto [f, d] = squarefree_split(radicand);
  if (!d.fits_slong_p()) return std::nullopt;
  Rational half(1, 2);
  Rational p0 = *trace * half;
  Rational q0 = Rational(f) / Rational(disc_rat.denominator()) * half;
  long disc = d.get_si();

  double target = z.embed().real();
  double root = std::sqrt(static_cast<double>(disc));
  double plus = p0.to_double() + q0.to_double() * root;
  double minus = p0.to_double() - q0.to_double() * root;
  Rational q = std::fabs(plus - target) <= std::fabs(minus - target) ? q0 : -q0;
  return ExactQuadratic{p0, q, disc};
}

}  // namespace projdes
