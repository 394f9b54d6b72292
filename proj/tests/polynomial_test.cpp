#include <doctest.h>

#include "qchom/polynomial.hpp"

using namespace qchom;

TEST_CASE("normal form and degree") {
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{Count(3), Count(0), Count(0)} == IntPolynomial::constant(3));
  CHECK(IntPolynomial::linear(2).degree() == 1);
  CHECK((IntPolynomial::linear(2) - IntPolynomial::linear(2)).is_zero());
}

TEST_CASE("arithmetic") {
  const auto a = IntPolynomial::linear(2);
  const auto b = IntPolynomial::linear(1);
  CHECK(a * b == IntPolynomial{Count(2), Count(-3), Count(1)});
  CHECK(a + b == IntPolynomial{Count(-3), Count(2)});
  CHECK(a * Count(2) == IntPolynomial{Count(-4), Count(2)});
  CHECK((a * b)(Count(3)) == 2);
  CHECK(eval_poly(a, Count(5)) == 3);
  CHECK((a * IntPolynomial{}).is_zero());
}

TEST_CASE("printing") {
  CHECK(IntPolynomial::linear(2).coefficient_list() == "[-2, 1]");
  CHECK(IntPolynomial::linear(2).human() == "-2 + 1*m");
  CHECK(IntPolynomial::constant(1).coefficient_list() == "[1]");
  CHECK(IntPolynomial{Count(2), Count(0), Count(1)}.human() == "2 + 0*m + 1*m^2");
}

TEST_CASE("evaluation matches expanded product at many points") {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int r = -3; r <= 4; ++r) p = p * IntPolynomial::linear(r);
  for (int m = -10; m <= 10; ++m) {
    Count expected = 1;
    for (int r = -3; r <= 4; ++r) expected *= m - r;
    CHECK(p(Count(m)) == expected);
  }
}
