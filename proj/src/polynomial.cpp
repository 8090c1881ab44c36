#include "projdes/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace projdes {

namespace {
void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}
void require_same_var(PolyVar a, PolyVar b) {
  if (a != b) throw std::domain_error("polynomial variable mismatch (tau vs xi)");
}
}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs, PolyVar var)
    : c_(std::move(coeffs)), var_(var) {
  trim(c_);
}

RationalPolynomial RationalPolynomial::constant(const Rational& c, PolyVar var) {
  return RationalPolynomial({c}, var);
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree, PolyVar var) {
  if (degree < 0) throw std::domain_error("monomial with negative degree");
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return RationalPolynomial(std::move(v), var);
}

Rational RationalPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[k];
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  require_same_var(var_, o.var_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim(c_);
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  require_same_var(var_, o.var_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim(c_);
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  require_same_var(a.var_, b.var_);
  if (a.is_zero() || b.is_zero()) return RationalPolynomial(a.var_);
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPolynomial(std::move(out), a.var_);
}

RationalPolynomial RationalPolynomial::scaled(const Rational& s) const {
  std::vector<Rational> out = c_;
  for (Rational& c : out) c *= s;
  return RationalPolynomial(std::move(out), var_);
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double RationalPolynomial::eval(double x) const {
  double acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
  return acc;
}

RealScalar RationalPolynomial::eval(const RealScalar& x) const {
  RealScalar acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + RealScalar(c_[i]);
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return RationalPolynomial(var_);
  std::vector<Rational> out(c_.size() - 1, Rational(0));
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return RationalPolynomial(std::move(out), var_);
}

RationalPolynomial RationalPolynomial::compose_affine(const Rational& a, const Rational& b,
                                                      PolyVar new_var) const {
  RationalPolynomial lin({b, a}, new_var);
  RationalPolynomial acc(new_var);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + RationalPolynomial::constant(c_[i], new_var);
  return acc;
}

bool RationalPolynomial::proportional_to(const RationalPolynomial& other) const {
  if (var_ != other.var_) return false;
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  if (degree() != other.degree()) return false;
  Rational ratio = c_.back() / other.c_.back();
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != other.c_[i] * ratio) return false;
  return true;
}

std::string RationalPolynomial::str(const std::string& symbol) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (k == 0) {
      os << c.str();
    } else {
      if (!c.is_one()) os << c.str() << "*";
      os << symbol;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace projdes
