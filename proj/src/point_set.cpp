#include "projdes/point_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace projdes {

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::exact_rational: return "exact_rational";
    case Backend::exact_cyclotomic: return "exact_cyclotomic";
    case Backend::exact_quaternion: return "exact_quaternion";
    case Backend::float_complex: return "float_complex";
    case Backend::float_quaternion: return "float_quaternion";
  }
  return "?";
}

bool backend_is_exact(Backend b) {
  return b == Backend::exact_rational || b == Backend::exact_cyclotomic ||
         b == Backend::exact_quaternion;
}

namespace {

bool coord_is_zero(const Rational& x) { return x.is_zero(); }
bool coord_is_zero(const Cyclotomic& x) { return x.is_zero(); }
bool coord_is_zero(const Quaternion<Rational>& x) {
  return x.w.is_zero() && x.x.is_zero() && x.y.is_zero() && x.z.is_zero();
}
bool coord_is_zero(const std::complex<double>& x) { return x.real() == 0.0 && x.imag() == 0.0; }
bool coord_is_zero(const Quaternion<double>& x) {
  return x.w == 0.0 && x.x == 0.0 && x.y == 0.0 && x.z == 0.0;
}

template <class Scalar>
void validate_points(const std::vector<std::vector<Scalar>>& pts, int n) {
  if (pts.empty()) throw std::domain_error("point set must be non-empty");
  for (size_t k = 0; k < pts.size(); ++k) {
    if (static_cast<int>(pts[k].size()) != n + 1)
      throw std::domain_error("point " + std::to_string(k) + " has " +
                              std::to_string(pts[k].size()) + " coordinates, expected " +
                              std::to_string(n + 1));
    bool all_zero = true;
    for (const Scalar& c : pts[k])
      if (!coord_is_zero(c)) {
        all_zero = false;
        break;
      }
    if (all_zero) throw std::domain_error("point " + std::to_string(k) + " is the zero vector");
  }
}

}  // namespace

PointSet::PointSet(Field field, int n, Data points) : field_(field), n_(n), data_(std::move(points)) {
  if (n < 1) throw std::domain_error("projective dimension n must be >= 1");
  std::visit([n](const auto& pts) { validate_points(pts, n); }, data_);

  switch (backend()) {
    case Backend::exact_rational:
      break;
    case Backend::exact_cyclotomic:
      if (field_ == Field::R) {
        for (const auto& pt : std::get<CycloPoints>(data_))
          for (const Cyclotomic& c : pt)
            if (!c.is_real())
              throw std::domain_error("field R requires real coordinates; got " + c.str());
      }
      break;
    case Backend::float_complex:
      if (field_ == Field::R) {
        for (const auto& pt : std::get<ComplexPoints>(data_))
          for (const std::complex<double>& c : pt)
            if (c.imag() != 0.0)
              throw std::domain_error("field R requires real coordinates");
      }
      break;
    case Backend::exact_quaternion:
    case Backend::float_quaternion:
      if (field_ != Field::H)
        throw std::domain_error("quaternion coordinates require field H");
      break;
  }
}

int PointSet::size() const {
  return std::visit([](const auto& pts) { return static_cast<int>(pts.size()); }, data_);
}

Backend PointSet::backend() const {
  switch (data_.index()) {
    case 0: return Backend::exact_rational;
    case 1: return Backend::exact_cyclotomic;
    case 2: return Backend::exact_quaternion;
    case 3: return Backend::float_complex;
    default: return Backend::float_quaternion;
  }
}

PointSet PointSet::to_float() const {
  if (!exact()) return *this;
  if (const auto* rp = std::get_if<RationalPoints>(&data_)) {
    if (field_ == Field::H) {
      FloatQuatPoints out;
      for (const auto& pt : *rp) {
        std::vector<Quaternion<double>> row;
        for (const Rational& c : pt) row.push_back({c.to_double(), 0.0, 0.0, 0.0});
        out.push_back(std::move(row));
      }
      return PointSet(field_, n_, std::move(out));
    }
    ComplexPoints out;
    for (const auto& pt : *rp) {
      std::vector<std::complex<double>> row;
      for (const Rational& c : pt) row.emplace_back(c.to_double(), 0.0);
      out.push_back(std::move(row));
    }
    return PointSet(field_, n_, std::move(out));
  }
  if (const auto* cp = std::get_if<CycloPoints>(&data_)) {
    ComplexPoints out;
    for (const auto& pt : *cp) {
      std::vector<std::complex<double>> row;
      for (const Cyclotomic& c : pt) {
        std::complex<double> v = c.embed();
        if (field_ == Field::R) v = {v.real(), 0.0};  // clear conjugation-fixed rounding dust
        row.push_back(v);
      }
      out.push_back(std::move(row));
    }
    return PointSet(field_, n_, std::move(out));
  }
  const auto& qp = std::get<QuatPoints>(data_);
  FloatQuatPoints out;
  for (const auto& pt : qp) {
    std::vector<Quaternion<double>> row;
    for (const Quaternion<Rational>& c : pt)
      row.push_back({c.w.to_double(), c.x.to_double(), c.y.to_double(), c.z.to_double()});
    out.push_back(std::move(row));
  }
  return PointSet(field_, n_, std::move(out));
}

bool operator==(const PointSet& a, const PointSet& b) {
  return a.field_ == b.field_ && a.n_ == b.n_ && a.data_ == b.data_;
}

GramMatrix::GramMatrix(int size, bool exact)
    : size_(size), exact_(exact), e_(static_cast<size_t>(size) * size) {
  if (!exact)
    for (RealScalar& v : e_) v = RealScalar(0.0);
}

namespace {

// Squared inner product |x* y|^2 and self products, per backend.

RealScalar pair_abs2(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational acc(0);
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return RealScalar(acc * acc);
}
RealScalar self_norm(const std::vector<Rational>& x) {
  Rational acc(0);
  for (const Rational& c : x) acc += c * c;
  return RealScalar(acc);
}

RealScalar pair_abs2(const std::vector<Cyclotomic>& x, const std::vector<Cyclotomic>& y) {
  Cyclotomic acc(x[0].order());
  for (size_t i = 0; i < x.size(); ++i) acc += x[i].conj() * y[i];
  return RealScalar(acc.abs2());
}
RealScalar self_norm(const std::vector<Cyclotomic>& x) {
  Cyclotomic acc(x[0].order());
  for (const Cyclotomic& c : x) acc += c.abs2();
  return RealScalar(acc);
}

RealScalar pair_abs2(const std::vector<Quaternion<Rational>>& x,
                     const std::vector<Quaternion<Rational>>& y) {
  Quaternion<Rational> acc;
  for (size_t i = 0; i < x.size(); ++i) acc = acc + x[i].conj() * y[i];
  return RealScalar(acc.abs2());
}
RealScalar self_norm(const std::vector<Quaternion<Rational>>& x) {
  Rational acc(0);
  for (const Quaternion<Rational>& c : x) acc += c.abs2();
  return RealScalar(acc);
}

RealScalar pair_abs2(const std::vector<std::complex<double>>& x,
                     const std::vector<std::complex<double>>& y) {
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return RealScalar(std::norm(acc));
}
RealScalar self_norm(const std::vector<std::complex<double>>& x) {
  double acc = 0.0;
  for (const std::complex<double>& c : x) acc += std::norm(c);
  return RealScalar(acc);
}

RealScalar pair_abs2(const std::vector<Quaternion<double>>& x,
                     const std::vector<Quaternion<double>>& y) {
  Quaternion<double> acc;
  for (size_t i = 0; i < x.size(); ++i) acc = acc + x[i].conj() * y[i];
  return RealScalar(acc.abs2());
}
RealScalar self_norm(const std::vector<Quaternion<double>>& x) {
  double acc = 0.0;
  for (const Quaternion<double>& c : x) acc += c.abs2();
  return RealScalar(acc);
}

}  // namespace

GramMatrix gram(const PointSet& ps) {
  const int count = ps.size();
  GramMatrix g(count, ps.exact());
  const RealScalar one = ps.exact() ? RealScalar(Rational(1)) : RealScalar(1.0);

  std::visit(
      [&](const auto& pts) {
        std::vector<RealScalar> norms;
        norms.reserve(count);
        for (int i = 0; i < count; ++i) norms.push_back(self_norm(pts[i]));
        for (int i = 0; i < count; ++i) {
          g.at(i, i) = one;
          for (int j = 0; j < i; ++j) {
            RealScalar v = pair_abs2(pts[i], pts[j]) / (norms[i] * norms[j]);
            g.at(i, j) = v;
            g.at(j, i) = v;
          }
        }
      },
      ps.data());
  return g;
}

AngleSet angle_set(const GramMatrix& g, double tol) {
  AngleSet out;
  if (g.exact()) {
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < i; ++j) {
        const RealScalar& v = g.at(i, j);
        if (v == RealScalar(Rational(1)))
          throw std::domain_error("duplicate projective points " + std::to_string(j) + " and " +
                                  std::to_string(i));
        double img = v.to_double();
        if (img < -1e-12 || img > 1.0 + 1e-12)
          throw std::domain_error("gram value outside [0, 1]: " + v.str());
        bool seen = false;
        for (const RealScalar& w : out.values)
          if (w == v) {
            seen = true;
            break;
          }
        if (!seen) out.values.push_back(v);
      }
    std::sort(out.values.begin(), out.values.end(), approx_less);
    for (const RealScalar& v : out.values)
      if (v.is_zero()) out.eps = 1;
  } else {
    std::vector<double> vals;
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < i; ++j) {
        double v = g.at(i, j).to_double();
        if (v >= 1.0 - tol)
          throw std::domain_error("duplicate projective points " + std::to_string(j) + " and " +
                                  std::to_string(i));
        if (v < -tol || v > 1.0 + tol)
          throw std::domain_error("gram value outside [0, 1]: " + std::to_string(v));
        vals.push_back(v);
      }
    std::sort(vals.begin(), vals.end());
    size_t i = 0;
    while (i < vals.size()) {
      size_t j = i;
      double sum = 0.0;
      while (j < vals.size() && vals[j] - vals[i] <= tol) sum += vals[j++];
      double mean = sum / static_cast<double>(j - i);
      if (std::fabs(mean) <= tol) {
        out.eps = 1;
        mean = std::fabs(mean);
      }
      out.values.push_back(RealScalar(mean));
      i = j;
    }
  }
  out.s = static_cast<int>(out.values.size());
  out.e = out.s - out.eps;
  return out;
}

AngleSet angle_set(const PointSet& ps, double tol) { return angle_set(gram(ps), tol); }

}  // namespace projdes
