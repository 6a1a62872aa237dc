#include <doctest.h>

#include "sympair/scalar.hpp"
#include "test_util.hpp"

using namespace sympair;
using testutil::Rng;

TEST_CASE("rational arithmetic is exact") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Scalar x = testutil::random_scalar(rng);
    Scalar y = testutil::random_scalar(rng);
    CHECK((x + y) - y == x);
    CHECK(x * Scalar(1) == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("quadratic extension arithmetic is exact") {
  Rng rng(13);
  for (unsigned long d : {2ul, 3ul, 5ul, 7ul}) {
    for (int i = 0; i < 100; ++i) {
      Scalar x = testutil::random_scalar(rng, d);
      Scalar y = testutil::random_scalar(rng, d);
      CHECK((x + y) - y == x);
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
  }
  // sqrt(2)^2 = 2
  Scalar r2(Rational(0), Rational(1), 2);
  CHECK(r2 * r2 == Scalar(2));
  CHECK((Scalar(1) + r2) * (Scalar(-1) + r2) == Scalar(1));
}

TEST_CASE("zero test needs both coordinates zero") {
  Scalar x(Rational(1), Rational(-1), 2);  // 1 - sqrt(2)
  CHECK(!x.is_zero());
  CHECK(Scalar(Rational(0), Rational(0), 2).is_zero());
  CHECK(Scalar(Rational(0), Rational(1), 2) != Scalar(0));
}

TEST_CASE("sign decision compares a^2 against d b^2") {
  CHECK(Scalar(Rational(1), Rational(-1), 2).sign() == -1);   // 1 - sqrt 2
  CHECK(Scalar(Rational(3), Rational(-2), 2).sign() == 1);    // 3 - 2 sqrt 2
  CHECK(Scalar(Rational(-2), Rational(1), 5).sign() == 1);    // sqrt 5 - 2
  CHECK(Scalar(Rational(2), Rational(-1), 5).sign() == -1);
  CHECK(Scalar(Rational(7, 5), Rational(-1), 2).sign() == -1);  // 49/25 < 2
  CHECK(Scalar(0).sign() == 0);
  CHECK((Scalar(Rational(1), Rational(1), 2)).sign() == 1);
  CHECK((Scalar(Rational(-1), Rational(-1), 2)).sign() == -1);
}

TEST_CASE("perfect-square radicands collapse to rationals") {
  CHECK(Scalar(Rational(0), Rational(1), 4) == Scalar(2));
  CHECK(Scalar(Rational(1), Rational(1), 9) == Scalar(4));
  CHECK(Scalar(Rational(0), Rational(1), 1) == Scalar(1));
  // square parts fold into the coefficient: sqrt(8) = 2 sqrt(2)
  CHECK(Scalar(Rational(0), Rational(1), 8) == Scalar(Rational(0), Rational(2), 2));
  CHECK(Scalar(Rational(0), Rational(1), 12) == Scalar(Rational(0), Rational(2), 3));
}

TEST_CASE("sqrt_rational") {
  CHECK(Scalar::sqrt_rational(Rational(4, 9)) == Scalar(Rational(2, 3)));
  CHECK(Scalar::sqrt_rational(Rational(8)) == Scalar(Rational(0), Rational(2), 2));
  CHECK(Scalar::sqrt_rational(Rational(1, 2)) == Scalar(Rational(0), Rational(1, 2), 2));
  CHECK(Scalar::sqrt_rational(Rational(12, 25)) == Scalar(Rational(0), Rational(2, 5), 3));
  CHECK(Scalar::sqrt_rational(Rational(0)).is_zero());
  Scalar t = Scalar::sqrt_rational(Rational(5, 3));
  CHECK(t * t == Scalar(Rational(5, 3)));
  CHECK_THROWS_AS(Scalar::sqrt_rational(Rational(-1)), std::domain_error);
}

TEST_CASE("mixing distinct radicands is rejected") {
  Scalar a(Rational(0), Rational(1), 2);
  Scalar b(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS(a + b, std::domain_error);
  CHECK_THROWS_AS(a * b, std::domain_error);
  // rationals mix with everything
  CHECK((a + Scalar(1)) - Scalar(1) == a);
}

TEST_CASE("parse of print round-trips") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    Scalar x = testutil::random_scalar(rng);
    CHECK(Scalar::parse(x.str()) == x);
  }
  for (unsigned long d : {2ul, 5ul, 13ul}) {
    for (int i = 0; i < 100; ++i) {
      Scalar x = testutil::random_scalar(rng, d);
      CAPTURE(x.str());
      CHECK(Scalar::parse(x.str()) == x);
    }
  }
  CHECK(Scalar::parse("3/2") == Scalar(Rational(3, 2)));
  CHECK(Scalar::parse("-7") == Scalar(-7));
  CHECK(Scalar::parse("1/2*sqrt(5)") == Scalar(Rational(0), Rational(1, 2), 5));
  CHECK(Scalar::parse("-1+2*sqrt(3)") == Scalar(Rational(-1), Rational(2), 3));
  CHECK_THROWS(Scalar::parse("abc"));
}

TEST_CASE("total order") {
  CHECK(Scalar(1) < Scalar(2));
  CHECK(Scalar(Rational(0), Rational(1), 2) < Scalar(Rational(3, 2)));
  CHECK(Scalar(Rational(7, 5)) < Scalar(Rational(0), Rational(1), 2));
  CHECK(abs(Scalar(-3)) == Scalar(3));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
}
