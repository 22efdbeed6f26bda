#include <doctest.h>

#include "matos/poly.hpp"

using namespace matos;

TEST_CASE("bivariate arithmetic and printing") {
  BivariatePoly t;  // x^2 + x + y
  t.add_term(2, 0, 1);
  t.add_term(1, 0, 1);
  t.add_term(0, 1, 1);
  CHECK(t.to_string() == "x^2 + x + y");
  CHECK(t.eval(1, 1) == 3);
  CHECK(t.eval(2, 2) == 8);

  BivariatePoly square = t * t;
  CHECK(square.eval(1, 1) == 9);
  CHECK(square.coeff(4, 0) == 1);
  CHECK(square.coeff(3, 0) == 2);
  CHECK(square.coeff(1, 1) == 2);
  CHECK(square.to_string() == "x^4 + 2x^3 + 2x^2 y + x^2 + 2x y + y^2");

  BivariatePoly zero;
  CHECK(zero.to_string() == "0");
  CHECK((t + zero) == t);
}

TEST_CASE("corank nullity building block") {
  // (x-1)^1 (y-1)^0 = x - 1
  BivariatePoly term = BivariatePoly::corank_nullity_term(1, 0);
  CHECK(term.to_string() == "x - 1");
  // (x-1)(y-1) = x y - x - y + 1
  BivariatePoly xy = BivariatePoly::corank_nullity_term(1, 1);
  CHECK(xy.coeff(1, 1) == 1);
  CHECK(xy.coeff(1, 0) == -1);
  CHECK(xy.coeff(0, 0) == 1);
  CHECK(xy.eval(3, 5) == 8);
}

TEST_CASE("univariate printing and evaluation") {
  UnivariatePoly chi({Int(2), Int(-3), Int(1)});  // t^2 - 3t + 2
  CHECK(chi.to_string() == "t^2 - 3t + 2");
  CHECK(chi.eval(1) == 0);
  CHECK(chi.eval(2) == 0);
  CHECK(chi.eval(0) == 2);

  UnivariatePoly minus_t({Int(0), Int(-1)});
  CHECK(minus_t.to_string() == "-t");
  CHECK((minus_t * minus_t).to_string() == "t^2");

  CHECK(UnivariatePoly{}.to_string() == "0");
  CHECK(UnivariatePoly::constant(Int(-7)).to_string() == "-7");
}
