#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace projdes {

/// Arbitrary-precision rational number.
///
/// Invariants: always stored in lowest terms with positive denominator;
/// zero is canonically 0/1. All operations preserve canonical form.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(const mpq_class& v);

  /// Accepts "p", "p/q", and decimal literals like "-1.25" or "2.5e-3".
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational from_string(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  /// Throws std::domain_error on zero.
  Rational inverse() const;
  /// Integer exponent; negative exponents require a nonzero base.
  Rational pow(long e) const;

  double to_double() const { return v_.get_d(); }
  /// Requires is_integer() and a value that fits in long.
  long to_long() const;

  /// "p" when integral, otherwise "p/q".
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

/// n! as a Rational; requires n >= 0.
Rational factorial(long n);

/// Rising factorial (gamma)_i = gamma (gamma+1) ... (gamma+i-1).
/// (gamma)_0 = 1. The index i = -1 is allowed with the convention
/// (gamma-1)(gamma)_{-1} = 1, i.e. (gamma)_{-1} = 1/(gamma-1); this is
/// undefined for gamma = 1 and throws std::domain_error there.
Rational pochhammer(const Rational& gamma, long i);

/// Euler totient; requires k >= 1.
long euler_phi(long k);

}  // namespace projdes
