#include <doctest.h>

#include <random>

#include "hpa/scalar.hpp"

using namespace hpa;

TEST_SUITE("scalar") {
  TEST_CASE("make_delta") {
    CHECK(Scalar::delta(4, +1) == Scalar(2));
    CHECK(Scalar::delta(4, -1) == Scalar(-2));
    CHECK(Scalar::delta(4, +1).is_rational());
    const Scalar d = Scalar::delta(2);
    CHECK(d * d == Scalar(2));
    const Scalar m = Scalar::delta(6, -1);
    CHECK(m == -Scalar::delta(6));
    CHECK(m * m == Scalar(6));
    CHECK_THROWS_AS(Scalar::delta(0), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::delta(2, 0), std::invalid_argument);
  }

  TEST_CASE("arithmetic examples with n = 2") {
    const Scalar d = Scalar::delta(2);
    CHECK((Scalar(1) + d) * (Scalar(1) - d) == Scalar(-1));
    CHECK(d.inverse() == Scalar(Rational(0), Rational(1, 2), 2));
    CHECK((Scalar(Rational(3, 2)) + d) + (Scalar(Rational(1, 2)) - d) == Scalar(2));
    CHECK_THROWS_AS(d / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  }

  TEST_CASE("s² − n vanishes for both roots") {
    for (long n : {2L, 3L, 4L, 6L, 9L})
      for (int sign : {1, -1}) {
        const Scalar s = Scalar::delta(n, sign);
        const Scalar r = s * s - Scalar(n);
        CHECK(r.rat() == 0);
        CHECK(r.coef_delta() == 0);
      }
  }

  TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    auto draw = [&] { return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 6); };
    for (int i = 0; i < 300; ++i) {
      const Scalar a = draw(), b = draw(), c = draw();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(a - a == Scalar(0));
    }
  }

  TEST_CASE("canonical form folds δ for perfect squares") {
    const Scalar s(Rational(1), Rational(3), 9);
    CHECK(s.is_rational());
    CHECK(s == Scalar(10));
  }

  TEST_CASE("mixing different n is rejected") {
    CHECK_THROWS_AS(Scalar::delta(2) + Scalar::delta(3), std::domain_error);
  }

  TEST_CASE("text form") {
    const Scalar d = Scalar::delta(2);
    CHECK(d.to_string() == "0 + 1·δ");
    CHECK((Scalar(Rational(1, 2)) - Scalar(3) * d).to_string() == "1/2 - 3·δ");
    CHECK(pow(d, -3) == Scalar(Rational(0), Rational(1, 4), 2));
    CHECK(pow(d, 0) == Scalar(1));
  }

  TEST_CASE("parse_rational") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("+7") == Rational(7));
    for (const char* bad : {"", "1/", "/2", "1/0", "1.5", "a", "1//2"}) CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}
