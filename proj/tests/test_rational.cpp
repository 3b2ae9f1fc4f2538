#include <doctest.h>

#include <asharp/errors.hpp>
#include <asharp/rational.hpp>

using namespace asharp;

TEST_CASE("arithmetic stays exact and reduced") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK((Rational(7, 2) - Rational(7, 2)) == Rational(0));
}

TEST_CASE("comparisons and helpers") {
  CHECK(Rational(2, 3) < Rational(3, 4));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(rat_min(rat(7, 3), rat(19, 8)) == rat(7, 3));
  CHECK(rat_max(rat(7, 3), rat(19, 8)) == rat(19, 8));
  CHECK(rat_abs(rat(-5, 4)) == rat(5, 4));
  CHECK(rat(5, 4).to_double() == doctest::Approx(1.25));
}

TEST_CASE("parse accepts fractions, integers, decimals") {
  CHECK(Rational::parse("3/4") == rat(3, 4));
  CHECK(Rational::parse("-3/4") == rat(-3, 4));
  CHECK(Rational::parse("2") == rat(2));
  CHECK(Rational::parse("0.125") == rat(1, 8));
  CHECK(Rational::parse("1.5") == rat(3, 2));
  CHECK(Rational::parse("-0.2") == rat(-1, 5));
  CHECK(Rational::parse(rat(22, 7).str()) == rat(22, 7));
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("order type: flat vs finite") {
  Order f = Order::flat();
  Order three = Order::finite(3);
  CHECK(f.is_flat());
  CHECK(!f.is_finite());
  CHECK(three.is_finite());
  CHECK(three.value() == 3);
  CHECK_THROWS_AS(f.value(), DomainError);

  // flat sits above every finite order
  CHECK(three < f);
  CHECK(!(f < three));
  CHECK(Order::finite(1000) < f);

  // 1/flat = 0 by convention, no FP infinities anywhere
  CHECK(f.reciprocal() == rat(0));
  CHECK(three.reciprocal() == rat(1, 3));
  CHECK(f.str() == "flat");
  CHECK(three.str() == "3");
}
