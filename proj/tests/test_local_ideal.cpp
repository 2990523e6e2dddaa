#include "support.hpp"

#include <wblowup/errors.hpp>

#include <gtest/gtest.h>

using namespace wbtest;

namespace {

const Variables xy = vars_of({"x", "y"});
const Variables xyz = vars_of({"x", "y", "z"});

// Embeds an ideal over xy into xyw by appending an unused variable.
LocalIdeal with_dummy(const LocalIdeal& ideal, const Variables& big) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ideal.num_variables(); ++i) images.push_back(Polynomial::variable(big, i));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute(images));
  return LocalIdeal(big, std::move(gens));
}

}  // namespace

TEST(LocalIdeal, Canonicalization) {
  EXPECT_TRUE(I("x, 3 + y", xy).is_unit());
  EXPECT_EQ(I("x, 3", xy).generators().size(), 1U);
  EXPECT_TRUE(I("0", xy).is_zero());
  EXPECT_EQ(I("2*x, x^2*y, x+0", xy), I("x", xy));
  EXPECT_EQ(I("x^2, x^2 + x^3*y", xy), I("x^2", xy));
  EXPECT_EQ(I("x^2+y^3", xy).to_string(), "(y^3 + x^2)");
}

TEST(LocalIdeal, OrderIsMinimalGeneratorOrder) {
  EXPECT_EQ(ord(I("x^2+y^3, x*y^4", xy)), Order(2));
  EXPECT_EQ(ord(I("0", xy)), Order::infinity());
  EXPECT_EQ(ord(I("1+x", xy)), Order(0));
}

// [DERIVED] D^{<=1}(x^2+y^3) = (x^2+y^3, 2x, 3y^2) = (x, y^2).
TEST(LocalIdeal, DerivativeIdealCusp) {
  EXPECT_EQ(derivative_ideal(I("x^2+y^3", xy), 1), I("x, y^2", xy));
  EXPECT_TRUE(derivative_ideal(I("x^2+y^3", xy), 2).is_unit());
  EXPECT_EQ(derivative_ideal(I("x^3+y^4", xy), 2), I("x, y^2", xy));
}

TEST(LocalIdeal, DerivativeIdealMonomialFastPath) {
  // Every divisor of x^2*y within total distance 1.
  EXPECT_EQ(derivative_ideal(I("x^2*y", xy), 1), I("x*y, x^2", xy));
}

TEST(LocalIdeal, OrdViaDerivationsExamples) {
  EXPECT_EQ(ord_via_derivations(I("x^2+y^3", xy)), Order(2));
  EXPECT_EQ(ord_via_derivations(I("x^3*y^2 + y^7", xy)), Order(5));
  EXPECT_EQ(ord_via_derivations(I("0", xy)), Order::infinity());
  EXPECT_EQ(ord_via_derivations(I("1", xy)), Order(0));
}

TEST(LocalIdealProperty, DerivativeComposition) {
  Random rnd(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens{rnd.polynomial(xyz, 5, 3, false), rnd.polynomial(xyz, 4, 2, false)};
    const LocalIdeal ideal(xyz, gens);
    const unsigned i = static_cast<unsigned>(rnd.integer(0, 2));
    const unsigned j = static_cast<unsigned>(rnd.integer(0, 2));
    EXPECT_EQ(ord(derivative_ideal(derivative_ideal(ideal, j), i)), ord(derivative_ideal(ideal, i + j)));
  }
  // Monomial ideals: equal as generator sets.
  for (const char* g : {"x^3*y^2", "x^4, y^3*z", "x*y*z^2"}) {
    const LocalIdeal m = I(g, xyz);
    EXPECT_EQ(derivative_ideal(derivative_ideal(m, 1), 2), derivative_ideal(m, 3)) << g;
  }
}

TEST(LocalIdeal, CoefficientIdealCusp) {
  // [DERIVED] C = (x^2+y^3) + (x, y^2)^2
  const LocalIdeal c = coefficient_ideal(I("x^2+y^3", xy));
  EXPECT_EQ(c, I("x^2+y^3, x^2, x*y^2, y^4", xy));
  EXPECT_EQ(ord(c), Order(2));
  EXPECT_EQ(restrict(c, 0), I("y^3", vars_of({"y"})));
  EXPECT_THROW(coefficient_ideal(I("1+x", xy)), ArithmeticError);
}

TEST(LocalIdealProperty, CoefficientIdealOrderAtLeastFactorial) {
  Random rnd(22);
  for (int trial = 0; trial < 30; ++trial) {
    const LocalIdeal ideal(xy, {rnd.polynomial(xy, 4, 3, false)});
    const Order d = ord(ideal);
    if (d.is_infinite() || d.value() == 0 || d.value() > 4) continue;
    EXPECT_GE(ord(coefficient_ideal(ideal)).value(), factorial(d.value()).get_ui());
  }
}

TEST(LocalIdealProperty, CoefficientIdealCommutesWithDummyVariable) {
  const Variables xyw = vars_of({"x", "y", "w"});
  Random rnd(23);
  for (int trial = 0; trial < 20; ++trial) {
    const LocalIdeal ideal(xy, {rnd.polynomial(xy, 4, 3, false), rnd.polynomial(xy, 3, 2, false)});
    const Order d = ord(ideal);
    if (d.is_infinite() || d.value() > 4) continue;
    EXPECT_EQ(coefficient_ideal(with_dummy(ideal, xyw)), with_dummy(coefficient_ideal(ideal), xyw));
  }
}

TEST(LocalIdeal, SumProductPower) {
  EXPECT_EQ(product(I("x, y", xy), I("x, y", xy)), I("x^2, x*y, y^2", xy));
  EXPECT_EQ(power(I("x, y^2", xy), 2), I("x^2, x*y^2, y^4", xy));
  EXPECT_EQ(sum(I("x", xy), I("y^2", xy)), I("x, y^2", xy));
  EXPECT_EQ(power(I("x+y", xy), 3), I("(x+y)^3", xy));
  EXPECT_TRUE(power(I("x", xy), 0).is_unit());
}

TEST(LocalIdealProperty, PowerOrders) {
  Random rnd(24);
  for (int trial = 0; trial < 30; ++trial) {
    const LocalIdeal ideal(xyz, {rnd.polynomial(xyz, 3, 3, false), rnd.polynomial(xyz, 3, 2, false)});
    if (ideal.is_zero()) continue;
    EXPECT_EQ(ord(power(ideal, 3)).value(), 3 * ord(ideal).value());
  }
}

TEST(LocalIdeal, RestrictAndInterreduce) {
  const LocalIdeal r = restrict(I("x^2+y^3, x*z", xyz), 0);
  EXPECT_EQ(r, I("y^3", vars_of({"y", "z"})));
  EXPECT_EQ(interreduce(I("x^2+y, x^2+2*y", xy)), I("x^2, y", xy));
}

// Lemma on order duality: two independent computations of ord.
TEST(LocalIdealProperty, OrdEqualsOrdViaDerivations) {
  Random rnd(25);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
    const Variables vars = n == 1 ? vars_of({"x"}) : n == 2 ? xy : xyz;
    std::vector<Polynomial> gens;
    for (long k = rnd.integer(1, 3); k > 0; --k) gens.push_back(rnd.polynomial(vars, 5, 4));
    const LocalIdeal ideal(vars, gens);
    EXPECT_EQ(ord(ideal), ord_via_derivations(ideal)) << ideal;
  }
}
