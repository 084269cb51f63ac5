/* SPDX-License-Identifier: Apache-2.0 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactreal/fmachine.hpp"
#include "exactreal/real_expr.hpp"
#include "support/oracles.hpp"

using namespace exactreal;

TEST_CASE("from_rational is exact") {
  CHECK(from_rational(rat(2, 3)).query(rat(1, 100)) == rat(2, 3));
  CHECK(from_rational(0).query(1) == Rational(0));
  CHECK(from_rational(rat(-5, 2)).query(rat(1, 2)) == rat(-5, 2));
  CHECK_THROWS_AS(from_rational(1).query(0), std::invalid_argument);
  auto o = from_rational(rat(7, 9));
  for (long k = 0; k < 50; ++k) CHECK(o(Rational::pow2(-k)) == rat(7, 9));
}

TEST_CASE("expr_to_machine translations") {
  auto plus_one = expr_to_machine(RealExpr::add(RealExpr::var(0), RealExpr::constant(1)), 1);
  CHECK(plus_one.apply(Query(rat(1, 2), rat(1, 8))) == Answer{rat(3, 2), ExtAccuracy::finite(rat(1, 4))});
  // the constant contributes the query eta, so eps = 2 eta
  auto id = expr_to_machine(RealExpr::var(0), 1);
  testing::RandomRationals rnd(2);
  for (int k = 0; k < 100; ++k) {
    Query q(rnd.next(), rnd.positive());
    CHECK(id.apply(q) == identity().apply(q));
  }
  CHECK_THROWS_AS(expr_to_machine(RealExpr::var(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(expr_to_machine(RealExpr::neg(RealExpr::var(3)), 2), std::invalid_argument);
  CHECK(RealExpr::mul(RealExpr::var(0), RealExpr::var(4)).min_arity() == 5);
}

TEST_CASE("band expression is the chi of (x+1-y)(y-x)") {
  auto x = RealExpr::var(0), y = RealExpr::var(1);
  auto e = RealExpr::chi_pos(
      RealExpr::mul(RealExpr::sub(RealExpr::add(x, RealExpr::constant(1)), y), RealExpr::sub(y, x)));
  auto m = expr_to_machine(e, 2);
  CHECK(m.arity() == 2);
  std::vector<RealOracle> inside{from_rational(0), from_rational(rat(1, 2))};
  auto v = apply_machine(m, inside, Fuel(200));
  CHECK(v(rat(1, 64)) == Rational(1));
}

TEST_CASE("apply_machine") {
  auto chi_at_one = apply_machine(chi_pos(), {from_rational(1)}, Fuel(100));
  CHECK(chi_at_one(rat(1, 16)) == Rational(1));

  auto third = apply_machine(identity(), {from_rational(rat(1, 3))}, Fuel(100));
  for (long k = 0; k < 30; ++k) CHECK((third(Rational::pow2(-k)) - rat(1, 3)).abs() <= Rational::pow2(-k));

  auto undefined = apply_machine(chi_pos(), {from_rational(-1)}, Fuel(100));
  CHECK_THROWS_AS(undefined(rat(1, 4)), DivergenceError);
  try {
    undefined(rat(1, 4));
  } catch (const DivergenceError& e) {
    CHECK(e.all_infinite());
    CHECK(e.steps_taken() == 100);
  }
  CHECK_THROWS_AS(apply_machine(lift_arith(Arith::add), {from_rational(1)}, Fuel(10)), std::invalid_argument);
}

TEST_CASE("apply_machine output feeds further machines") {
  // (x + 1) then doubled via add(v, v)
  auto inner = apply_machine(expr_to_machine(RealExpr::add(RealExpr::var(0), RealExpr::constant(1)), 1),
                             {from_rational(rat(1, 3))}, Fuel(100));
  auto outer = apply_machine(lift_arith(Arith::add), {inner, inner}, Fuel(100));
  CHECK((outer(rat(1, 1000)) - rat(8, 3)).abs() <= rat(1, 1000));

  // a divergent argument surfaces as no-convergence of the outer refinement
  auto bad = apply_machine(chi_pos(), {from_rational(0)}, Fuel(20));
  auto res = refine(identity(), std::vector<RealOracle>{bad}, rat(1, 4), Fuel(20));
  CHECK(std::holds_alternative<NoConvergence>(res));
}

TEST_CASE("property: apply_machine agrees with exact evaluation") {
  testing::RandomRationals rnd(1234);
  int defined = 0, undefined = 0;
  for (int k = 0; k < 500; ++k) {
    std::size_t arity = 1 + rnd.index(2);
    auto e = rnd.expr(1 + rnd.index(4), arity);
    std::vector<Rational> x;
    std::vector<RealOracle> args;
    for (std::size_t i = 0; i < arity; ++i) {
      x.push_back(rnd.next(16, 8));
      args.push_back(from_rational(x.back()));
    }
    Rational eta = Rational::pow2(-static_cast<long>(rnd.index(40)));
    auto exact = testing::exact_eval(e, x);
    auto oracle = apply_machine(expr_to_machine(e, arity), args, Fuel(300));
    if (exact) {
      ++defined;
      Rational r = oracle(eta);
      CHECK((r - *exact).abs() <= eta);
      CHECK(oracle.query(eta) == oracle.query(eta));
    } else {
      ++undefined;
      CHECK_THROWS_AS(oracle(eta), DivergenceError);
    }
  }
  CHECK(defined > 300);
  CHECK(undefined > 0);
}

TEST_CASE("property: compositions of catalog machines are sound") {
  testing::RandomRationals rnd(77);
  for (int k = 0; k < 40; ++k) {
    auto e = rnd.expr(4, 2);
    auto m = expr_to_machine(e, 2);
    auto res = testing::check_soundness(
        m, [&](std::span<const Rational> x) { return testing::exact_eval(e, x); }, 250, 500 + k);
    CHECK(res.violations == 0);
  }
}
