#include <doctest.h>

#include <vector>

#include "cactus/formula.hpp"
#include "cactus/jackson.hpp"

using namespace cactus;

TEST_CASE("sparse polynomial arithmetic") {
  IntPoly one = IntPoly::constant(2, 1);
  IntPoly x = IntPoly::variable(2, 0);
  IntPoly y = IntPoly::variable(2, 1);

  IntPoly prod = (one + x) * (one - x);
  IntPoly expect = one - x * x;
  CHECK(prod == expect);

  CHECK((x + y - x - y).is_zero());
  CHECK((x + y - x - y).num_terms() == 0);  // cancelled terms are erased

  IntPoly p = (one + x + y).pow(0);
  CHECK(p == one);
  CHECK((x * y).coefficient({1, 1}) == 1);
  CHECK((x * y).coefficient({2, 0}) == 0);

  IntPoly z3 = IntPoly::variable(3, 2);
  CHECK_THROWS(x + z3);  // arity mismatch
}

TEST_CASE("small product forms in closed form") {
  // n=1: the bare monomial x_1 x_2
  IntPoly j12 = jackson_polynomial(1, 2);
  IntPoly expect12 = IntPoly::variable(2, 0) * IntPoly::variable(2, 1);
  CHECK(j12 == expect12);

  // n=2, r=3: x1 x2 x3 * (1 + e1 + e2), seven terms
  IntPoly j23 = jackson_polynomial(2, 3);
  CHECK(j23.num_terms() == 7);
  CHECK(j23.coefficient({1, 1, 1}) == 1);
  CHECK(j23.coefficient({2, 1, 1}) == 1);
  CHECK(j23.coefficient({2, 2, 1}) == 1);
  CHECK(j23.coefficient({2, 2, 2}) == 0);  // prod x_i cancels in the base
}

TEST_CASE("coefficient extraction") {
  CHECK(jackson_coefficient(1, 2, {1, 1}) == 1);
  CHECK(jackson_coefficient(3, 2, {2, 2}) == 2);
  CHECK(jackson_coefficient(2, 3, {1, 1, 1}) == 1);
  CHECK(jackson_coefficient(3, 2, {4, 1}) == 0);

  CHECK(jackson_coefficient_multinomial(1, 2, {1, 1}) == 1);
  CHECK(jackson_coefficient_multinomial(3, 2, {2, 2}) == 2);
  CHECK(jackson_coefficient_multinomial(2, 3, {1, 1, 1}) == 1);
}

TEST_CASE("the two forms agree termwise on small instances") {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 2; r <= 3; ++r) {
      EquivalenceReport rep = jackson_forms_agree(n, r);
      INFO(rep.detail);
      CHECK(rep.ok);
    }
  }
}

TEST_CASE("tables keep nonzero entries only and match each other") {
  CountTable prod = jackson_table(3, 2, JacksonForm::product);
  CountTable multi = jackson_table(3, 2, JacksonForm::multinomial);
  CHECK(prod == multi);
  for (const auto& [p, v] : prod) CHECK(v != 0);
  CHECK(prod.at({2, 2}) == 2);
}

TEST_CASE("bridge to the determinant series: C(p) = n^(r-1) J(p)") {
  CHECK(series_coefficient(3, 2, {2, 2}) == Int(3) * jackson_coefficient(3, 2, {2, 2}));
  CHECK(series_coefficient(2, 3, {1, 1, 1}) ==
        Int(4) * jackson_coefficient(2, 3, {1, 1, 1}));
  CHECK(series_coefficient(4, 2, {2, 3}) ==
        Int(4) * jackson_coefficient(4, 2, {2, 3}));
}

TEST_CASE("r=2 closed-form identity") {
  for (int n = 1; n <= 6; ++n) {
    EquivalenceReport rep = jackson_r2_identity(n);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("budget guard on the expansion") {
  CHECK_THROWS_AS(jackson_polynomial(100, 3, Budget{1000}), BudgetError);
}
