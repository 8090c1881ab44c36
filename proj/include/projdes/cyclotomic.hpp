#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projdes/rational.hpp"

namespace projdes {

/// Shared per-order data: the cyclotomic polynomial Phi_m and reduction
/// rows x^j mod Phi_m for every exponent j that arithmetic can produce.
struct CycloTable {
  long order = 1;
  long degree = 1;                            // euler_phi(order)
  std::vector<Rational> phi;                  // monic, length degree+1, lowest first
  std::vector<std::vector<Rational>> powers;  // powers[j - degree] = x^j mod Phi_m
};

/// Cached table lookup. Safe to call concurrently; fills are idempotent.
std::shared_ptr<const CycloTable> cyclo_table(long order);

/// Element of the cyclotomic field Q(zeta_m), stored on the power basis
/// 1, zeta, ..., zeta^(phi(m)-1) reduced mod Phi_m. Coefficients are exact
/// rationals; equality is coefficient-wise on this canonical form.
class Cyclotomic {
 public:
  explicit Cyclotomic(long order = 1);
  Cyclotomic(long order, const Rational& constant);
  /// zeta_order^power (power taken mod order).
  static Cyclotomic root_of_unity(long order, long power);
  /// From power-basis coefficients, length at most phi(order) after reduction
  /// of arbitrary-degree input (exponents >= phi(order) are folded).
  static Cyclotomic from_power_coeffs(long order, std::vector<Rational> raw);

  long order() const { return table_->order; }
  long degree() const { return table_->degree; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Rational& r);
  friend Cyclotomic operator*(const Rational& r, const Cyclotomic& a) { return a * r; }
  /// Field inverse via the extended Euclidean algorithm against Phi_m.
  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Galois action zeta -> zeta^k; requires gcd(k, order) = 1.
  Cyclotomic galois(long k) const;
  /// Complex conjugation zeta -> zeta^(order-1).
  Cyclotomic conj() const;
  /// z * conj(z); always fixed by conjugation.
  Cyclotomic abs2() const;
  /// Fixed by conjugation, i.e. a real number under every embedding.
  bool is_real() const;

  /// The rational value when all non-constant coefficients vanish.
  std::optional<Rational> rational_value() const;

  /// Numeric image under zeta -> exp(2*pi*i*k/order); requires gcd(k, order) = 1.
  std::complex<double> embed(long k = 1) const;

  /// Power-basis form such as "1/2 - z^2 + z^3" with z = zeta_order.
  std::string str() const;

 private:
  std::shared_ptr<const CycloTable> table_;
  std::vector<Rational> c_;  // length degree()
};

}  // namespace projdes
