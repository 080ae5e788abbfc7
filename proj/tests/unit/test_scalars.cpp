#include <doctest.h>

#include "whs/scalar.hpp"

using namespace whs;

TEST_CASE("gaussian rational field operations") {
  GaussianRational a(Rational(1, 2), Rational(3, 4));
  GaussianRational b(Rational(-2), Rational(1, 3));
  CHECK(a + b == GaussianRational(Rational(-3, 2), Rational(13, 12)));
  CHECK(a * b == GaussianRational(Rational(-5, 4), Rational(-4, 3)));
  CHECK((a / b) * b == a);
  CHECK(a - a == GaussianRational());
  CHECK(a.inverse() * a == GaussianRational(1));
  CHECK_THROWS_AS(GaussianRational().inverse(), DomainError);
}

TEST_CASE("gaussian rational norm and conjugate") {
  GaussianRational a(Rational(3), Rational(4));
  CHECK(a.norm() == Rational(25));
  CHECK(a * a.conjugate() == GaussianRational(Rational(25)));
}

TEST_CASE("canonical strings round-trip") {
  const char* cases[] = {"0",       "1",          "-1",        "1/2",  "-3/4",
                         "1*i",     "-1*i",       "2/3*i",     "1+1*i", "1/2-3/4*i",
                         "-5+2/7*i"};
  for (const char* s : cases) {
    GaussianRational v = gaussian_from_string(s);
    CHECK(to_string(v) == s);
    CHECK(gaussian_from_string(to_string(v)) == v);
  }
  CHECK(gaussian_from_string("i") == GaussianRational::i());
  CHECK(gaussian_from_string("3i") == GaussianRational(Rational(0), Rational(3)));
  CHECK(gaussian_from_string("2.5") == GaussianRational(Rational(5, 2)));
  CHECK_THROWS_AS(gaussian_from_string("1+"), ParseError);
  CHECK_THROWS_AS(gaussian_from_string("1/0"), ParseError);
}

TEST_CASE("lexicographic tie-break order") {
  CHECK(cmp_lex(GaussianRational(0), GaussianRational(1)) < 0);
  CHECK(cmp_lex(GaussianRational(Rational(1), Rational(-1)),
                GaussianRational(Rational(1), Rational(0))) < 0);
  CHECK(cmp_lex(GaussianRational(2), GaussianRational(2)) == 0);
}

TEST_CASE("scalar mode promotion") {
  Scalar e(GaussianRational(Rational(1, 3)));
  Scalar a(BigComplex::of(GaussianRational(Rational(2)), 192));
  CHECK(e.mode() == Mode::exact);
  CHECK(a.mode() == Mode::approx);
  Scalar s = e + a;
  CHECK(s.mode() == Mode::approx);
  CHECK(s.approx().precision() == 192);
  CHECK(numerically_equal(s, Scalar(GaussianRational(Rational(7, 3))),
                          BigFloat::pow2(-100, 192)));
}

TEST_CASE("scalar equality is representation-level") {
  CHECK(Scalar(1L) == Scalar(GaussianRational(Rational(1))));
  CHECK(Scalar(1L) != Scalar(BigComplex::of(GaussianRational(1), 128)));
}

TEST_CASE("default tolerance matches the documented 2^-64 at 128 bits") {
  BigFloat tol = default_tolerance(128);
  CHECK(cmp(tol, BigFloat::pow2(-64, 128)) == 0);
}

TEST_CASE("bigfloat roots and trig support the complex 5th root") {
  BigFloat x = BigFloat::of(Rational(32), 256);
  CHECK((x.root(5) - BigFloat::of(2L, 256)).abs() < BigFloat::pow2(-200, 256));
  BigFloat neg = BigFloat::of(-32.0, 256);
  CHECK((neg.root(5) + BigFloat::of(2L, 256)).abs() < BigFloat::pow2(-200, 256));
}
