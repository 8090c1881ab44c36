#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracle_helpers.hpp"
#include "projdes/census.hpp"
#include "projdes/designs.hpp"
#include "projdes/point_set.hpp"

using namespace projdes;

namespace {

bool rows_equal(const CensusRow& a, const CensusRow& b) {
  return a.field == b.field && a.n == b.n && a.s == b.s && a.t == b.t &&
         a.rank_L1 == b.rank_L1 && a.rank_Ls == b.rank_Ls && a.equal == b.equal &&
         a.bound == b.bound;
}

const std::vector<Field> all_fields = {Field::R, Field::C, Field::H};

}  // namespace

TEST_CASE("single classifications") {
  CensusRow c13 = classify(Field::C, 1, 3);
  CHECK(c13.t == 5);
  CHECK(c13.rank_L1 == Rational(3));
  CHECK(c13.rank_Ls == Rational(3));
  CHECK(c13.equal);
  CHECK(c13.bound == Rational(12));

  CensusRow h12 = classify(Field::H, 1, 2);
  CHECK(h12.rank_L1 == Rational(5));
  CHECK(h12.rank_Ls == Rational(4));
  CHECK_FALSE(h12.equal);
  CHECK(h12.bound == Rational(10));

  for (int s = 2; s <= 8; ++s) {
    CAPTURE(s);
    CensusRow r2 = classify(Field::R, 2, s);
    CHECK(r2.rank_L1 == Rational(5));
    CHECK(r2.rank_Ls == Rational(2 * s));
    CHECK_FALSE(r2.equal);
  }

  CHECK_FALSE(classify(Field::C, 1, 2).equal);
  CHECK_FALSE(classify(Field::C, 1, 4).equal);

  CHECK_THROWS_AS(classify(Field::R, 0, 2), std::domain_error);
  CHECK_THROWS_AS(classify(Field::R, 1, 1), std::domain_error);
}

TEST_CASE("full sweep finds a single coincidence") {
  std::vector<CensusRow> rows = sweep(all_fields, 10, 12);
  REQUIRE(rows.size() == 330);

  size_t idx = 0;
  for (Field f : all_fields)
    for (int n = 1; n <= 10; ++n)
      for (int s = 2; s <= 12; ++s) {
        const CensusRow& row = rows[idx++];
        CHECK(row.field == f);
        CHECK(row.n == n);
        CHECK(row.s == s);
        CHECK(row.t == 2 * s - 1);
      }

  int equal_count = 0;
  const CensusRow* hit = nullptr;
  for (const CensusRow& row : rows)
    if (row.equal) {
      ++equal_count;
      hit = &row;
    }
  REQUIRE(equal_count == 1);
  CHECK(hit->field == Field::C);
  CHECK(hit->n == 1);
  CHECK(hit->s == 3);
}

TEST_CASE("sweep output does not depend on the job count") {
  std::vector<CensusRow> serial = sweep(all_fields, 6, 8, 1);
  for (int jobs : {4, 37}) {
    CAPTURE(jobs);
    std::vector<CensusRow> parallel = sweep(all_fields, 6, 8, jobs);
    REQUIRE(parallel.size() == serial.size());
    for (size_t i = 0; i < serial.size(); ++i) CHECK(rows_equal(serial[i], parallel[i]));
  }
}

TEST_CASE("top rank grows with s except on the real line") {
  for (Field f : all_fields)
    for (int n = 1; n <= 4; ++n) {
      Rational prev = classify(f, n, 2).rank_Ls;
      for (int s = 3; s <= 20; ++s) {
        CAPTURE(field_name(f));
        CAPTURE(n);
        CAPTURE(s);
        Rational cur = classify(f, n, s).rank_Ls;
        if (f == Field::R && n == 1)
          CHECK(cur == Rational(1));
        else
          CHECK(cur > prev);
        prev = cur;
      }
    }
}

TEST_CASE("difference closed forms on the projective line") {
  for (int s = 2; s <= 20; ++s) {
    CAPTURE(s);
    Rational sr(static_cast<long>(s));
    CHECK(classify(Field::R, 1, s).rank_Ls - classify(Field::R, 1, s).rank_L1 == Rational(-1));
    CHECK(classify(Field::C, 1, s).rank_Ls - classify(Field::C, 1, s).rank_L1 == sr - Rational(3));
    CHECK(classify(Field::H, 1, s).rank_Ls - classify(Field::H, 1, s).rank_L1 ==
          sr * (sr + Rational(1)) * (sr + Rational(2)) / Rational(6) - Rational(5));
  }
}

TEST_CASE("rationality table") {
  std::vector<RationalityRow> rows = rationality_table(200);
  REQUIRE(rows.size() == 200);
  for (const RationalityRow& row : rows) {
    bool expected = row.t == 1 || row.t == 2 || row.t == 3 || row.t == 5;
    CHECK(row.rational == expected);
  }

  std::vector<RationalityRow> one = rationality_table(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].rational);

  CHECK_THROWS_AS(rationality_table(0), std::domain_error);
}

TEST_CASE("rationality agrees with the polygon angle sets") {
  for (int t = 1; t <= 30; ++t) {
    CAPTURE(t);
    AngleSet a = angle_set(construct_rp1_polygon(t));
    bool all_rational = true;
    for (const RealScalar& v : a.values)
      if (!v.rational_value().has_value()) all_rational = false;
    CHECK(rp1_rational(t) == all_rational);
    CHECK(rp1_rational(t) == (euler_phi(t + 1) <= 2));
  }
}
