#include "projdes/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace projdes {

namespace {

// Dense univariate polynomial helpers, coefficients lowest first.
// The zero polynomial is the empty vector.

void poly_trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Quotient and remainder of a by b; b must be nonzero and trimmed.
std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(std::vector<Rational> a,
                                                                    const std::vector<Rational>& b) {
  poly_trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (size_t k = a.size(); k-- >= b.size();) {
    if (a[k].is_zero()) {
      if (k == 0) break;
      continue;
    }
    Rational c = a[k] / lead;
    q[k - (b.size() - 1)] = c;
    for (size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
    if (k == 0) break;
  }
  poly_trim(a);
  return {std::move(q), std::move(a)};
}

std::vector<Rational> poly_div_exact(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.empty()) throw std::logic_error("polynomial division expected to be exact");
  return q;
}

std::shared_ptr<const CycloTable> build_table(long order) {
  auto t = std::make_shared<CycloTable>();
  t->order = order;
  t->degree = euler_phi(order);

  // Phi_m = (x^m - 1) / prod of Phi_d over proper divisors d of m.
  std::vector<Rational> phi(order + 1, Rational(0));
  phi[0] = Rational(-1);
  phi[order] = Rational(1);
  for (long d = 1; d < order; ++d)
    if (order % d == 0) phi = poly_div_exact(phi, cyclo_table(d)->phi);
  poly_trim(phi);
  if (static_cast<long>(phi.size()) != t->degree + 1 || !phi.back().is_one())
    throw std::logic_error("cyclotomic polynomial construction failed");
  t->phi = std::move(phi);

  // Reduction rows x^j mod Phi_m for degree <= j <= order-1. Arithmetic folds
  // exponents mod `order` first, so no higher row is ever needed.
  if (t->degree <= order - 1) {
    std::vector<Rational> base(t->degree, Rational(0));
    for (long i = 0; i < t->degree; ++i) base[i] = -t->phi[i];
    t->powers.push_back(base);
    for (long j = t->degree + 1; j <= order - 1; ++j) {
      const std::vector<Rational>& prev = t->powers.back();
      std::vector<Rational> next(t->degree, Rational(0));
      Rational top = prev[t->degree - 1];
      for (long i = 1; i < t->degree; ++i) next[i] = prev[i - 1];
      if (!top.is_zero())
        for (long i = 0; i < t->degree; ++i) next[i] += top * base[i];
      t->powers.push_back(std::move(next));
    }
  }
  return t;
}

std::vector<Rational> reduce_raw(const CycloTable& t, std::vector<Rational> raw) {
  if (static_cast<long>(raw.size()) > t.order) {
    for (size_t j = t.order; j < raw.size(); ++j)
      if (!raw[j].is_zero()) raw[j % t.order] += raw[j];
    raw.resize(t.order);
  }
  std::vector<Rational> out(t.degree, Rational(0));
  for (size_t j = 0; j < raw.size(); ++j) {
    if (raw[j].is_zero()) continue;
    if (static_cast<long>(j) < t.degree) {
      out[j] += raw[j];
    } else {
      const std::vector<Rational>& row = t.powers[j - t.degree];
      for (long i = 0; i < t.degree; ++i) out[i] += raw[j] * row[i];
    }
  }
  return out;
}

}  // namespace

std::shared_ptr<const CycloTable> cyclo_table(long order) {
  if (order < 1) throw std::domain_error("cyclotomic order must be >= 1");
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const CycloTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  // Built outside the lock; build_table recurses into divisors.
  auto t = build_table(order);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(order, std::move(t)).first->second;
}

Cyclotomic::Cyclotomic(long order) : table_(cyclo_table(order)), c_(table_->degree, Rational(0)) {}

Cyclotomic::Cyclotomic(long order, const Rational& constant) : Cyclotomic(order) { c_[0] = constant; }

Cyclotomic Cyclotomic::root_of_unity(long order, long power) {
  Cyclotomic z(order);
  long p = ((power % order) + order) % order;
  std::vector<Rational> raw(p + 1, Rational(0));
  raw[p] = Rational(1);
  z.c_ = reduce_raw(*z.table_, std::move(raw));
  return z;
}

Cyclotomic Cyclotomic::from_power_coeffs(long order, std::vector<Rational> raw) {
  Cyclotomic z(order);
  z.c_ = reduce_raw(*z.table_, std::move(raw));
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const Rational& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (!c_[0].is_one()) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Rational& c : out.c_) c = -c;
  return out;
}

namespace {
// Constants (order-1 elements) mix freely with any order.
bool promote_constant(const Cyclotomic& src, long order, Cyclotomic& out) {
  if (src.order() != 1) return false;
  out = Cyclotomic(order, src.coeffs()[0]);
  return true;
}
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order() != o.order()) {
    Cyclotomic tmp(1);
    if (promote_constant(o, order(), tmp)) return *this += tmp;
    if (promote_constant(*this, o.order(), tmp)) return *this = tmp += o;
    throw std::domain_error("cyclotomic order mismatch in addition");
  }
  for (long i = 0; i < degree(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) {
    Cyclotomic tmp(1);
    if (promote_constant(b, a.order(), tmp)) return a * tmp;
    if (promote_constant(a, b.order(), tmp)) return tmp * b;
    throw std::domain_error("cyclotomic order mismatch in multiplication");
  }
  const long d = a.degree();
  std::vector<Rational> raw(2 * d - 1 > 0 ? 2 * d - 1 : 1, Rational(0));
  for (long i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (long j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic out(a.order());
  out.c_ = reduce_raw(*out.table_, std::move(raw));
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Rational& r) {
  Cyclotomic out = a;
  for (Rational& c : out.c_) c *= r;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (auto r = rational_value()) return Cyclotomic(order(), r->inverse());

  std::vector<Rational> r_prev = table_->phi, r_cur = c_;
  poly_trim(r_cur);
  std::vector<Rational> t_prev, t_cur{Rational(1)};
  while (!r_cur.empty()) {
    auto [q, rem] = poly_divmod(r_prev, r_cur);
    std::vector<Rational> t_next = t_prev;
    std::vector<Rational> qt = poly_mul(q, t_cur);
    t_next.resize(std::max(t_next.size(), qt.size()), Rational(0));
    for (size_t i = 0; i < qt.size(); ++i) t_next[i] -= qt[i];
    poly_trim(t_next);
    r_prev = std::move(r_cur);
    r_cur = std::move(rem);
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  // Phi_m is irreducible, so the gcd with a nonzero reduced element is a constant.
  if (r_prev.size() != 1) throw std::logic_error("cyclotomic inverse: nonconstant gcd");
  Rational scale = r_prev[0].inverse();
  for (Rational& c : t_prev) c *= scale;
  return from_power_coeffs(order(), std::move(t_prev));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) {
    Cyclotomic tmp(1);
    if (promote_constant(b, a.order(), tmp)) return a == tmp;
    if (promote_constant(a, b.order(), tmp)) return tmp == b;
    return false;
  }
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::galois(long k) const {
  long m = order();
  long kk = ((k % m) + m) % m;
  if (std::gcd(kk, m) != 1) throw std::domain_error("galois exponent not coprime to order");
  std::vector<Rational> raw(m, Rational(0));
  for (long j = 0; j < degree(); ++j) {
    if (c_[j].is_zero()) continue;
    raw[(j * kk) % m] += c_[j];
  }
  return from_power_coeffs(m, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const { return galois(order() - 1); }

Cyclotomic Cyclotomic::abs2() const { return *this * conj(); }

bool Cyclotomic::is_real() const { return conj() == *this; }

std::optional<Rational> Cyclotomic::rational_value() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return std::nullopt;
  return c_[0];
}

std::complex<double> Cyclotomic::embed(long k) const {
  long m = order();
  long kk = ((k % m) + m) % m;
  if (std::gcd(kk == 0 ? m : kk, m) != 1) throw std::domain_error("embedding exponent not coprime to order");
  std::complex<double> acc(0.0, 0.0);
  for (long j = 0; j < degree(); ++j) {
    if (c_[j].is_zero()) continue;
    double arg = 2.0 * std::numbers::pi * static_cast<double>((j * kk) % m) / static_cast<double>(m);
    acc += c_[j].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (long j = 0; j < degree(); ++j) {
    if (c_[j].is_zero()) continue;
    Rational a = c_[j];
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (j == 0) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace projdes
