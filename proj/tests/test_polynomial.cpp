#include <doctest.h>

#include <random>

#include "ekzero/polynomial.hpp"
#include "test_util.hpp"

using namespace ekzero;
using testutil::approx;

TEST_CASE("make_polynomial validates its input") {
  CHECK(testutil::p3().degree() == 6);
  CHECK(make_polynomial({1, 1}).degree() == 1);

  CHECK_THROWS_AS(make_polynomial({3, 2, 1, 4, 1, -2}), validation_error);
  CHECK_THROWS_AS(make_polynomial({1, 0, 1}), validation_error);
  CHECK_THROWS_AS(make_polynomial({5}), validation_error);
  try {
    make_polynomial({3, 2, 1, 4, 1, -2});
  } catch (const error& e) {
    CHECK(e.code() == errc::non_positive_coefficient);
  }
  try {
    make_polynomial({5});
  } catch (const error& e) {
    CHECK(e.code() == errc::too_short);
  }
}

TEST_CASE("reverse flips the coefficient order") {
  const Polynomial r1 = reverse(testutil::p1());
  const Vec expected1 = (Vec(6) << 2, 1, 4, 1, 2, 3).finished();
  CHECK(r1.coeffs() == expected1);

  const Polynomial r3 = reverse(testutil::p3());
  const Vec expected3 = (Vec(7) << 1, 4, 2, 2, 3, 6, 7).finished();
  CHECK(r3.coeffs() == expected3);

  const Polynomial palindrome = make_polynomial({1, 2, 1});
  CHECK(reverse(palindrome).coeffs() == palindrome.coeffs());
}

TEST_CASE("reverse is an involution") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 30);
    const Polynomial p = testutil::random_poly(rng, degree, 0.0, 10.0);
    CHECK(reverse(reverse(p)).coeffs() == p.coeffs());
  }
}

TEST_CASE("multiply is the exact multiplier convolution") {
  SUBCASE("(z + 1)(z - 2)") {
    const SignedPolynomial q = multiply(make_polynomial({1, 1}), MultiplierSpec::linear(2.0));
    const Vec expected = (Vec(3) << -2, -1, 1).finished();
    CHECK(q.coeffs() == expected);
  }

  SUBCASE("p3 times z^2 - 3") {
    const SignedPolynomial q = multiply(testutil::p3(), MultiplierSpec::quadratic(3.0, 0.0));
    const Vec expected = (Vec(9) << -21, -18, -2, 0, -3, -10, -1, 4, 1).finished();
    CHECK(q.coeffs() == expected);
  }

  SUBCASE("zero multiplier coefficients shift") {
    const Polynomial p = testutil::p2();
    const SignedPolynomial q = multiply(p, MultiplierSpec::cubic(0.0, 0.0, 0.0));
    CHECK(q.degree() == p.degree() + 3);
    CHECK(q.coeffs().head(3).isZero(0.0));
    CHECK(q.coeffs().tail(p.degree() + 1) == p.coeffs());
  }
}

TEST_CASE("multiply matches pointwise products") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> gdist(-3.0, 3.0);
  std::uniform_real_distribution<double> tdist(-2.0, 2.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 12);
    const Polynomial p = testutil::random_poly(rng, degree, 0.0, 10.0);
    const int d = 1 + static_cast<int>(rng() % 4);
    Vec g(d);
    for (int j = 0; j < d; ++j) g(j) = gdist(rng);
    const MultiplierSpec m(g);
    const SignedPolynomial q = multiply(p, m);
    for (int s = 0; s < 4; ++s) {
      const double t = tdist(rng);
      const double direct = evaluate(m.full_coeffs(), t) * evaluate(p.coeffs(), t);
      CHECK(approx(evaluate(q.coeffs(), t), direct, 1e-12));
    }
  }
}

TEST_CASE("nonleading_sign_report") {
  const SignedPolynomial ok((Vec(3) << -2, -1, 1).finished());  // z^2 - z - 2
  CHECK(nonleading_sign_report(ok, 1).all_nonpositive);

  const SignedPolynomial bad((Vec(3) << -2, 1, 1).finished());  // z^2 + z - 2
  const SignReport rep = nonleading_sign_report(bad, 1);
  CHECK_FALSE(rep.all_nonpositive);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0] == 1);

  const SignedPolynomial q = multiply(testutil::p3(), MultiplierSpec::quadratic(3.0, 0.0));
  CHECK(nonleading_sign_report(q, 2).all_nonpositive);

  CHECK_THROWS_AS(nonleading_sign_report(ok, 0), validation_error);
}

TEST_CASE("MultiplierSpec validation") {
  CHECK_THROWS_AS(MultiplierSpec((Vec(5) << 1, 1, 1, 1, 1).finished()), validation_error);
  CHECK_THROWS_AS(MultiplierSpec((Vec(4) << 1, 2, 1, 0).finished(),
                                 MultiplierSpec::Pattern::even_only),
                  validation_error);
  const MultiplierSpec quartic = MultiplierSpec::even_quartic(2.0, 0.5);
  CHECK(quartic.degree() == 4);
  CHECK(quartic.monic_coeffs()(1) == 0.0);
  CHECK(quartic.monic_coeffs()(3) == 0.0);
  const Vec full = quartic.full_coeffs();
  CHECK(full(4) == 1.0);
  CHECK(full(2) == -2.0);
  CHECK(full(0) == -0.5);
}
