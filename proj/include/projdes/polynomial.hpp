#pragma once

#include <string>
#include <vector>

#include "projdes/rational.hpp"
#include "projdes/real_scalar.hpp"

namespace projdes {

/// Which variable a polynomial lives in: tau on [-1, 1] or the squared
/// projective distance xi on [0, 1]. Arithmetic requires matching variables.
enum class PolyVar { tau, xi };

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first, trailing zeros stripped. The zero polynomial has degree -1.
class RationalPolynomial {
 public:
  explicit RationalPolynomial(PolyVar var = PolyVar::xi) : var_(var) {}
  RationalPolynomial(std::vector<Rational> coeffs, PolyVar var);
  static RationalPolynomial constant(const Rational& c, PolyVar var);
  static RationalPolynomial monomial(const Rational& c, int degree, PolyVar var);

  PolyVar var() const { return var_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  RationalPolynomial scaled(const Rational& s) const;
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  RealScalar eval(const RealScalar& x) const;

  RationalPolynomial derivative() const;

  /// p(a*u + b) as a polynomial in the new variable u.
  RationalPolynomial compose_affine(const Rational& a, const Rational& b, PolyVar new_var) const;

  /// True when this equals `other` times a nonzero rational constant.
  bool proportional_to(const RationalPolynomial& other) const;

  /// Display such as "30*x^2 - 30*x + 6", highest degree first.
  std::string str(const std::string& symbol) const;

 private:
  std::vector<Rational> c_;
  PolyVar var_;
};

}  // namespace projdes
