#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracle_helpers.hpp"
#include "projdes/designs.hpp"
#include "projdes/point_set.hpp"

using namespace projdes;

namespace {

// Three rational representatives in RP^1 that do not average any degree.
PointSet skew_triple() {
  PointSet::RationalPoints pts = {{Rational(1), Rational(0)},
                                  {Rational(1), Rational(1)},
                                  {Rational(2), Rational(1)}};
  return PointSet(Field::R, 1, std::move(pts));
}

}  // namespace

TEST_CASE("the 12-point complex design has exact strength 5") {
  PointSet ps = construct_cp1_5design();
  CHECK(ps.field() == Field::C);
  CHECK(ps.n() == 1);
  CHECK(ps.size() == 12);
  CHECK(ps.backend() == Backend::exact_cyclotomic);

  DesignVerdict v5 = is_t_design(ps, 5);
  CHECK(v5.is_design);
  REQUIRE(v5.residuals.size() == 5);
  for (const DegreeResidual& r : v5.residuals) {
    CHECK(r.exact);
    CHECK(r.zero);
    CHECK(r.residual == 0.0);
  }

  DesignVerdict v6 = is_t_design(ps, 6);
  CHECK_FALSE(v6.is_design);
  REQUIRE(v6.residuals.size() == 6);
  for (int i = 0; i < 5; ++i) CHECK(v6.residuals[i].zero);
  CHECK_FALSE(v6.residuals[5].zero);
  CHECK(v6.residuals[5].exact);
  CHECK(v6.residuals[5].residual > 1.0);
}

TEST_CASE("averaging check matches the polynomial check degree by degree") {
  PointSet cp1 = construct_cp1_5design();
  PointSet bad = skew_triple();

  // The two formulations are triangularly related, so the per-degree zero
  // flags must agree on designs and non-designs alike.
  auto flags_agree = [](const PointSet& ps, int t) {
    DesignVerdict a = is_t_design(ps, t);
    DesignVerdict b = averaging_check(ps, t);
    REQUIRE(a.residuals.size() == b.residuals.size());
    for (size_t k = 0; k < a.residuals.size(); ++k) {
      CHECK(a.residuals[k].zero == b.residuals[k].zero);
      CHECK(a.residuals[k].exact == b.residuals[k].exact);
    }
    CHECK(a.is_design == b.is_design);
    return a.is_design;
  };

  CHECK(flags_agree(cp1, 5));
  CHECK_FALSE(flags_agree(cp1, 6));
  CHECK_FALSE(flags_agree(bad, 3));
  CHECK_FALSE(flags_agree(cp1.to_float(), 6));
}

TEST_CASE("tightness certificate for the complex design") {
  PointSet ps = construct_cp1_5design();
  TightnessCertificate cert = tightness(ps, 5);

  CHECK(cert.s == 3);
  CHECK(cert.e == 2);
  CHECK(cert.eps == 1);
  CHECK(cert.t_max == 5);
  CHECK(cert.bound == Rational(12));
  CHECK(cert.cardinality_match);
  CHECK(cert.angles_annihilate);
  CHECK(cert.tight);

  // xi * R_2^1(xi) = 60 xi^3 - 60 xi^2 + 12 xi, and the normalization drops
  // out: any nonzero multiple has the same roots.
  CHECK(cert.annihilator.degree() == 3);
  CHECK(cert.annihilator.coeff(0) == Rational(0));
  CHECK(cert.annihilator.coeff(1) == Rational(12));
  CHECK(cert.annihilator.coeff(2) == Rational(-60));
  CHECK(cert.annihilator.coeff(3) == Rational(60));
  RationalPolynomial scaled({Rational(0), Rational(6), Rational(-30), Rational(30)}, PolyVar::xi);
  CHECK(cert.annihilator.proportional_to(scaled));

  REQUIRE(cert.angles.size() == 3);
  CHECK(cert.angles[0].is_zero());
  CHECK(cert.angles[1].to_double() == doctest::Approx((5.0 - std::sqrt(5.0)) / 10.0).epsilon(1e-14));
  CHECK(cert.angles[2].to_double() == doctest::Approx((5.0 + std::sqrt(5.0)) / 10.0).epsilon(1e-14));
  for (const RealScalar& a : cert.angles) {
    CHECK(a.is_exact());
    CHECK(cert.annihilator.eval(a).is_zero());
    CHECK(scaled.eval(a).is_zero());
  }
}

TEST_CASE("odd polygons are tight designs") {
  for (int t : {1, 3, 5, 7, 9}) {
    CAPTURE(t);
    PointSet ps = construct_rp1_polygon(t);
    CHECK(ps.field() == Field::R);
    CHECK(ps.size() == t + 1);
    CHECK(is_t_design(ps, t).is_design);
    TightnessCertificate cert = tightness(ps, t);
    CHECK(cert.tight);
    CHECK(cert.t_max == t);
    CHECK(cert.bound == Rational(t + 1));
    CHECK(cert.eps == 1);
  }

  TightnessCertificate c3 = tightness(construct_rp1_polygon(3), 3);
  REQUIRE(c3.angles.size() == 2);
  CHECK(c3.angles[0].is_zero());
  CHECK(c3.angles[1].rational_value() == Rational(1, 2));

  TightnessCertificate c5 = tightness(construct_rp1_polygon(5), 5);
  REQUIRE(c5.angles.size() == 3);
  CHECK(c5.angles[0].is_zero());
  CHECK(c5.angles[1].rational_value() == Rational(1, 4));
  CHECK(c5.angles[2].rational_value() == Rational(3, 4));
}

TEST_CASE("even polygons are tight designs as well") {
  for (int t : {2, 4, 6}) {
    CAPTURE(t);
    PointSet ps = construct_rp1_polygon(t);
    CHECK(ps.size() == t + 1);
    CHECK(is_t_design(ps, t).is_design);
    TightnessCertificate cert = tightness(ps, t);
    CHECK(cert.tight);
    CHECK(cert.eps == 0);
    CHECK(cert.bound == Rational(t + 1));
  }

  // Triangle in RP^1: a single angle 1/4, so s = e = 1.
  TightnessCertificate c2 = tightness(construct_rp1_polygon(2), 2);
  CHECK(c2.s == 1);
  CHECK(c2.e == 1);
  REQUIRE(c2.angles.size() == 1);
  CHECK(c2.angles[0].rational_value() == Rational(1, 4));
}

TEST_CASE("float image of the complex design verifies numerically") {
  PointSet fl = construct_cp1_5design().to_float();
  CHECK(fl.backend() == Backend::float_complex);

  DesignVerdict v5 = is_t_design(fl, 5);
  CHECK(v5.is_design);
  for (const DegreeResidual& r : v5.residuals) {
    CHECK_FALSE(r.exact);
    CHECK(r.residual < 12 * 1e-8);
  }
  CHECK_FALSE(is_t_design(fl, 6).is_design);

  TightnessCertificate cert = tightness(fl, 5);
  CHECK(cert.tight);
  CHECK(cert.cardinality_match);
  CHECK(cert.angles_annihilate);
  for (const RealScalar& a : cert.angles) CHECK_FALSE(a.is_exact());
}

TEST_CASE("a non-design is rejected") {
  PointSet bad = skew_triple();
  CHECK_FALSE(is_t_design(bad, 1).is_design);
  CHECK_THROWS_AS(tightness(bad, 1), std::invalid_argument);
}

TEST_CASE("strength zero is rejected") {
  PointSet bad = skew_triple();
  CHECK_THROWS_AS(is_t_design(bad, 0), std::domain_error);
  CHECK_THROWS_AS(averaging_check(bad, 0), std::domain_error);
  CHECK_THROWS_AS(construct_rp1_polygon(0), std::domain_error);
  CHECK_THROWS_AS(rp1_rational(0), std::domain_error);
}

TEST_CASE("angle-set rationality matches the totient rule") {
  std::set<int> rational_t;
  for (int t = 1; t <= 30; ++t) {
    CAPTURE(t);
    CHECK(rp1_rational(t) == (euler_phi(t + 1) <= 2));
    if (rp1_rational(t)) rational_t.insert(t);
  }
  CHECK(rational_t == std::set<int>{1, 2, 3, 5});
}
