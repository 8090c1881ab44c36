#pragma once

#include <optional>
#include <string>
#include <variant>

#include "projdes/cyclotomic.hpp"
#include "projdes/rational.hpp"

namespace projdes {

/// Exact real algebraic value of the form p + q*sqrt(disc) with rational
/// p, q and a nonnegative integer radicand (squarefree when reduce() ran).
struct ExactQuadratic {
  Rational p;
  Rational q;
  long disc = 0;

  bool is_rational() const { return q.is_zero() || disc == 0; }
  double value() const;
  /// Canonical display, e.g. "1/2", "(5-sqrt5)/10", "(1+3*sqrt2)/4".
  std::string str() const;
};

/// Real scalar used for Gram entries, residuals and algebra coefficients.
/// Holds either an exact value (Rational, or a conjugation-fixed Cyclotomic)
/// or a double for the float backend. Exact cyclotomic values that are
/// rational collapse to Rational on construction, so exact equality is
/// canonical. Arithmetic involving any float operand degrades to double;
/// exact operands promote Rational -> Cyclotomic as needed.
class RealScalar {
 public:
  RealScalar() : v_(Rational(0)) {}
  RealScalar(const Rational& r) : v_(r) {}
  RealScalar(long n) : v_(Rational(n)) {}
  /// Requires a conjugation-fixed value; throws std::domain_error otherwise.
  RealScalar(const Cyclotomic& z);
  explicit RealScalar(double v) : v_(v) {}

  bool is_exact() const { return !std::holds_alternative<double>(v_); }
  bool is_zero() const;
  double to_double() const;
  double abs_double() const;

  std::optional<Rational> rational_value() const;
  const Cyclotomic* cyclotomic_value() const { return std::get_if<Cyclotomic>(&v_); }
  double float_value() const { return std::get<double>(v_); }

  friend RealScalar operator+(const RealScalar& a, const RealScalar& b);
  friend RealScalar operator-(const RealScalar& a, const RealScalar& b);
  friend RealScalar operator*(const RealScalar& a, const RealScalar& b);
  friend RealScalar operator/(const RealScalar& a, const RealScalar& b);
  RealScalar operator-() const;
  RealScalar& operator+=(const RealScalar& o) { return *this = *this + o; }
  RealScalar& operator-=(const RealScalar& o) { return *this = *this - o; }
  RealScalar& operator*=(const RealScalar& o) { return *this = *this * o; }

  RealScalar pow(long k) const;

  /// Exact scalars compare exactly; float scalars compare bitwise;
  /// an exact/float mix compares false.
  friend bool operator==(const RealScalar& a, const RealScalar& b);
  friend bool operator!=(const RealScalar& a, const RealScalar& b) { return !(a == b); }

  /// Canonical display: "p/q" for rationals, quadratic-surd form when the
  /// value generates a degree-2 extension, power-basis form otherwise,
  /// 15 significant digits for floats.
  std::string str() const;

 private:
  std::variant<Rational, Cyclotomic, double> v_;
};

/// Exact operands compare exactly (tol ignored); anything float compares
/// via |a - b| <= tol on double images.
bool approx_equal(const RealScalar& a, const RealScalar& b, double tol);

/// True ordering of double images; used only for sorting displays/angle sets.
bool approx_less(const RealScalar& a, const RealScalar& b);

/// Detects values lying in a quadratic (or trivial) extension of Q by
/// Galois orbit size; exact. Returns nullopt when the orbit is larger.
std::optional<ExactQuadratic> quadratic_form(const Cyclotomic& z);

/// Writes sqrt(x) = f * sqrt(d) with rational f >= 0 and integer d >= 0
/// (d squarefree up to the trial-division bound). Requires x >= 0.
std::pair<Rational, long> rational_sqrt_decompose(const Rational& x);

}  // namespace projdes
