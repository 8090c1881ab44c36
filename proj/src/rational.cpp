#include "projdes/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace projdes {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("invalid rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
  if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_literal(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_literal(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) bad_literal(text);
    mpq_class q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return Rational(q);
  }

  // Decimal form: digits[.digits][(e|E)[+-]digits]
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    mantissa = s.substr(0, epos);
    std::string_view exp = s.substr(epos + 1);
    bool exp_neg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_neg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_literal(text);
    exponent = std::stol(std::string(exp));
    if (exp_neg) exponent = -exponent;
  }

  std::string digits;
  long frac_len = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mantissa.substr(0, dot);
    std::string_view fp = mantissa.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad_literal(text);
    if (!ip.empty() && !all_digits(ip)) bad_literal(text);
    if (!fp.empty() && !all_digits(fp)) bad_literal(text);
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) bad_literal(text);
    digits = std::string(mantissa);
  }
  if (digits.empty()) bad_literal(text);

  mpq_class q(mpz_class(digits, 10));
  long shift = exponent - frac_len;
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0)
    q *= ten_pow;
  else
    q /= ten_pow;
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r(1), base(v_);
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) r *= base;
    if (k > 1) base *= base;
  }
  return Rational(r);
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("to_long on non-integer rational " + str());
  mpz_class n = numerator();
  if (!n.fits_slong_p()) throw std::domain_error("rational too large for long: " + str());
  return n.get_si();
}

std::string Rational::str() const { return v_.get_str(); }

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational pochhammer(const Rational& gamma, long i) {
  if (i < -1) throw std::domain_error("pochhammer index below -1");
  if (i == -1) {
    Rational down = gamma - Rational(1);
    if (down.is_zero())
      throw std::domain_error("pochhammer(1, -1) is undefined");
    return down.inverse();
  }
  Rational acc(1);
  for (long l = 1; l <= i; ++l) acc *= gamma - Rational(1) + Rational(l);
  return acc;
}

long euler_phi(long k) {
  if (k < 1) throw std::domain_error("euler_phi requires k >= 1");
  long result = k, rest = k;
  for (long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    result -= result / p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

}  // namespace projdes
