#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <complex>
#include <numeric>
#include <thread>

#include "oracle_helpers.hpp"
#include "projdes/cyclotomic.hpp"
#include "projdes/quaternion.hpp"
#include "projdes/rational.hpp"
#include "projdes/real_scalar.hpp"

using namespace projdes;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).to_long() == 2);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing accepts integers, fractions and decimals") {
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("1.25") == Rational(5, 4));
  CHECK(Rational::from_string("2.5e-3") == Rational(1, 400));
  CHECK(Rational::from_string("-0.5e2") == Rational(-50));
  CHECK(Rational::from_string("+4") == Rational(4));
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1..2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational arithmetic, powers and inverses") {
  Rational a(2, 3), b(-5, 7);
  CHECK(a + b == Rational(-1, 21));
  CHECK(a * b == Rational(-10, 21));
  CHECK(a / b == Rational(-14, 15));
  CHECK(b.abs() == Rational(5, 7));
  CHECK(a.inverse() == Rational(3, 2));
  CHECK(a.pow(3) == Rational(8, 27));
  CHECK(a.pow(-2) == Rational(9, 4));
  CHECK(a.pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
  CHECK(a < Rational(1));
  CHECK(b < a);
}

TEST_CASE("factorial and rising factorial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(factorial(20) == Rational::from_string("2432902008176640000"));

  CHECK(pochhammer(Rational(3), 0) == Rational(1));
  CHECK(pochhammer(Rational(3), 4) == Rational(360));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-3), 2) == Rational(6));
  CHECK(pochhammer(Rational(-3), 4) == Rational(0));
  // index -1 pairs with a factor of (gamma - 1): (gamma-1) * (gamma)_{-1} = 1
  CHECK(pochhammer(Rational(3), -1) == Rational(1, 2));
  CHECK(pochhammer(Rational(1, 2), -1) == Rational(-2));
  CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::domain_error);
}

TEST_CASE("euler phi matches the gcd-counting definition") {
  for (long k = 1; k <= 200; ++k) {
    long count = 0;
    for (long j = 1; j <= k; ++j)
      if (std::gcd(j, k) == 1) ++count;
    CAPTURE(k);
    CHECK(euler_phi(k) == count);
  }
}

TEST_CASE("cyclotomic basis has degree phi(order)") {
  for (long m = 1; m <= 30; ++m) {
    auto table = cyclo_table(m);
    CAPTURE(m);
    CHECK(table->degree == euler_phi(m));
    CHECK(static_cast<long>(table->phi.size()) == table->degree + 1);
    CHECK(table->phi.back() == Rational(1));  // monic
  }
}

TEST_CASE("roots of unity fold exponents modulo the order") {
  CHECK(Cyclotomic::root_of_unity(5, 5).is_one());
  CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
  CHECK(Cyclotomic::root_of_unity(12, 25) == Cyclotomic::root_of_unity(12, 1));
  Cyclotomic a = Cyclotomic::root_of_unity(7, 3), b = Cyclotomic::root_of_unity(7, 5);
  CHECK(a * b == Cyclotomic::root_of_unity(7, 1));
}

TEST_CASE("primitive roots of prime order sum to zero") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    Cyclotomic sum(p);
    for (long j = 0; j < p; ++j) sum += Cyclotomic::root_of_unity(p, j);
    CAPTURE(p);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("numeric embedding matches the unit circle") {
  for (long m : {5L, 8L, 12L}) {
    for (long j = 0; j < m; ++j) {
      std::complex<double> got = Cyclotomic::root_of_unity(m, j).embed();
      std::complex<double> want = std::polar(1.0, 2.0 * M_PI * j / m);
      CAPTURE(m);
      CAPTURE(j);
      CHECK(std::abs(got - want) < 1e-12);
    }
  }
}

TEST_CASE("cyclotomic arithmetic commutes with the embedding") {
  for (long m : {5L, 7L, 12L}) {
    for (int rep = 0; rep < 10; ++rep) {
      Cyclotomic a = oracle::random_cyclotomic(m), b = oracle::random_cyclotomic(m);
      CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-9);
      CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-9);
      CHECK(std::abs((a - b).embed() - (a.embed() - b.embed())) < 1e-9);
    }
  }
}

TEST_CASE("field inverses are exact") {
  for (long m : {5L, 7L, 8L, 12L}) {
    for (int rep = 0; rep < 8; ++rep) {
      Cyclotomic a = oracle::random_cyclotomic(m);
      if (a.is_zero()) continue;
      CHECK((a * a.inverse()).is_one());
    }
  }
  CHECK_THROWS_AS(Cyclotomic(5).inverse(), std::domain_error);
}

TEST_CASE("conjugation and absolute value squared") {
  Cyclotomic z = oracle::random_cyclotomic(5);
  CHECK(std::abs(z.conj().embed() - std::conj(z.embed())) < 1e-9);
  Cyclotomic a2 = z.abs2();
  CHECK(a2.is_real());
  CHECK(std::abs(a2.embed().imag()) < 1e-12);
  CHECK(std::abs(a2.embed().real() - std::norm(z.embed())) < 1e-9);
  CHECK(!Cyclotomic::root_of_unity(5, 1).is_real());
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(5, 1).galois(5), std::domain_error);
}

TEST_CASE("rational values collapse out of the power basis") {
  CHECK(Cyclotomic(7, Rational(3, 2)).rational_value() == Rational(3, 2));
  CHECK(!Cyclotomic::root_of_unity(5, 1).rational_value());
  // zeta^4 + zeta^3 + zeta^2 + zeta + 1 = 0 at order 5
  Cyclotomic sum(5);
  for (long j = 0; j <= 4; ++j) sum += Cyclotomic::root_of_unity(5, j);
  CHECK(sum.rational_value() == Rational(0));
  CHECK(Cyclotomic::from_power_coeffs(5, {Rational(0), Rational(0), Rational(0), Rational(0),
                                          Rational(0), Rational(1)})
            .is_one());
}

TEST_CASE("the golden element of order five") {
  Cyclotomic lambda = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  CHECK(lambda.is_real());
  CHECK((lambda * lambda + lambda - Cyclotomic(5, Rational(1))).is_zero());
  auto q = quadratic_form(lambda);
  REQUIRE(q.has_value());
  CHECK(q->p == Rational(-1, 2));
  CHECK(q->q == Rational(1, 2));
  CHECK(q->disc == 5);
  CHECK(q->str() == "(-1+sqrt5)/2");
  CHECK(std::fabs(q->value() - 0.618033988749895) < 1e-12);
}

TEST_CASE("table cache is safe under concurrent lookups") {
  std::vector<std::thread> pool;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 8; ++w)
    pool.emplace_back([&] {
      for (long m = 1; m <= 40; ++m)
        if (cyclo_table(m)->degree != euler_phi(m)) ok = false;
    });
  for (auto& th : pool) th.join();
  CHECK(ok.load());
}

TEST_CASE("quaternion units multiply by the Hamilton rules") {
  using Q = Quaternion<Rational>;
  Q one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == Q{0, 0, 0, -1});
  CHECK(i * i == Q{-1, 0, 0, 0});
  CHECK(j * j == Q{-1, 0, 0, 0});
  CHECK(k * k == Q{-1, 0, 0, 0});
  CHECK(one * i == i);
}

TEST_CASE("quaternion norm is multiplicative and conjugation reverses products") {
  using Q = Quaternion<Rational>;
  for (int rep = 0; rep < 10; ++rep) {
    Q a{oracle::random_rational(), oracle::random_rational(), oracle::random_rational(),
        oracle::random_rational()};
    Q b{oracle::random_rational(), oracle::random_rational(), oracle::random_rational(),
        oracle::random_rational()};
    CHECK((a * b).abs2() == a.abs2() * b.abs2());
    CHECK((a * b).conj() == b.conj() * a.conj());
  }
}

TEST_CASE("real scalars collapse rational cyclotomics") {
  RealScalar a(Cyclotomic(5, Rational(2, 3)));
  CHECK(a.rational_value() == Rational(2, 3));
  CHECK(a.is_exact());
  CHECK_THROWS_AS(RealScalar(Cyclotomic::root_of_unity(5, 1)), std::domain_error);
}

TEST_CASE("real scalar arithmetic degrades to float only when mixed") {
  RealScalar exact(Rational(1, 3));
  RealScalar fl(0.5);
  CHECK((exact + exact).is_exact());
  CHECK(!(exact + fl).is_exact());
  CHECK((exact + fl).to_double() == doctest::Approx(1.0 / 3 + 0.5));
  CHECK(exact != fl);  // exact/float mixes never compare equal
  CHECK(exact.pow(2) == RealScalar(Rational(1, 9)));
  CHECK(approx_equal(RealScalar(0.5), RealScalar(0.5 + 1e-12), 1e-9));
  CHECK(!approx_equal(RealScalar(0.5), RealScalar(0.6), 1e-9));
  CHECK(approx_less(RealScalar(Rational(1, 3)), RealScalar(Rational(1, 2))));
}

TEST_CASE("real scalar display uses canonical forms") {
  CHECK(RealScalar(Rational(3, 2)).str() == "3/2");
  Cyclotomic lambda = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  RealScalar xi1((Cyclotomic(5, Rational(2)) - lambda) * Rational(1, 5));
  CHECK(xi1.str() == "(5-sqrt5)/10");
  RealScalar xi2((Cyclotomic(5, Rational(3)) + lambda) * Rational(1, 5));
  CHECK(xi2.str() == "(5+sqrt5)/10");
  CHECK(xi1.to_double() == doctest::Approx(0.2763932022500210).epsilon(1e-12));
}

TEST_CASE("quadratic surd displays") {
  CHECK(ExactQuadratic{Rational(1, 2), Rational(0), 0}.str() == "1/2");
  CHECK(ExactQuadratic{Rational(0), Rational(1), 5}.str() == "sqrt5");
  CHECK(ExactQuadratic{Rational(-1, 2), Rational(1, 2), 5}.str() == "(-1+sqrt5)/2");
  CHECK(ExactQuadratic{Rational(1, 2), Rational(3, 4), 2}.str() == "(2+3*sqrt2)/4");
}

TEST_CASE("square roots of rationals split into a rational times a surd") {
  auto [f1, d1] = rational_sqrt_decompose(Rational(4, 9));
  CHECK(f1 == Rational(2, 3));
  CHECK(d1 == 1);
  auto [f2, d2] = rational_sqrt_decompose(Rational(5, 4));
  CHECK(f2 == Rational(1, 2));
  CHECK(d2 == 5);
  auto [f3, d3] = rational_sqrt_decompose(Rational(18));
  CHECK(f3 == Rational(3));
  CHECK(d3 == 2);
  auto [f0, d0] = rational_sqrt_decompose(Rational(0));
  CHECK(f0 == Rational(0));
  CHECK(d0 == 0);
  CHECK_THROWS_AS(rational_sqrt_decompose(Rational(-1)), std::domain_error);
}
