#include "support.hpp"

#include <wblowup/blowup.hpp>
#include <wblowup/errors.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace wbtest;

namespace {

const Variables xy = vars_of({"x", "y"});
const Variables xyz = vars_of({"x", "y", "z"});

// Images of the parent variables at a chart point, or nullopt on a pole.
std::optional<std::vector<Rational>> images_at(const Chart& chart, const std::vector<Rational>& c) {
  std::vector<Rational> out;
  for (const auto& f : chart.substitution) {
    const Rational den = f.den.evaluate(c);
    if (den.is_zero()) return std::nullopt;
    out.push_back(f.num.evaluate(c) / den);
  }
  return out;
}

const std::vector<LocalIdeal>& suite() {
  static const std::vector<LocalIdeal> ideals{
      I("x^2 + y^3", xy),       I("x^2 + x*y^2", xy),     I("x^2 + y^2*z", xyz),  I("x^3 + y^4 + z^5", xyz),
      I("x^2, y^3", xy),        I("x*y + z^3", xyz),      I("x^2 + y^5, x*y^2", xy), I("x^3 + x*y^5", xy),
      I("(x - y)*(x + y)*(x - 2*y)", xy)};
  return ideals;
}

}  // namespace

// [DERIVED] cusp charts: x = s^3, y = s^2 y' and x = s^3 x', y = s^2.
TEST(Blowup, CuspCharts) {
  const auto r = canonical_center(I("x^2 + y^3", xy));
  const auto charts = canonical_blowup(r.center);
  ASSERT_EQ(charts.size(), 2U);
  const Chart& cx = charts[0];
  EXPECT_EQ(cx.id, "root/x");
  EXPECT_EQ(cx.n, 6);
  EXPECT_EQ(cx.weights, (std::vector<BigInt>{3, 2}));
  EXPECT_EQ(cx.substitution[0].to_string(), "s^3");
  EXPECT_EQ(cx.substitution[1].to_string(), "s^2*y'");
  const auto tx = transform(I("x^2 + y^3", xy), cx);
  EXPECT_EQ(tx.ideal, I("1 + y'^3", cx.variables));
  EXPECT_EQ(tx.exceptional_multiplicity, 6);
  EXPECT_EQ(cx.mu_order, 3);
  const Chart& cy = charts[1];
  EXPECT_EQ(cy.id, "root/y");
  EXPECT_EQ(transform(I("x^2 + y^3", xy), cy).ideal, I("x'^2 + 1", cy.variables));
  EXPECT_EQ(cy.mu_order, 2);
}

// [PAPER] with t = x + y^2/2 the equation reads t^2 - y^4/4.
TEST(Blowup, TailFrameCharts) {
  const LocalIdeal ideal = I("x^2 + x*y^2", xy);
  const auto charts = canonical_blowup(canonical_center(ideal).center);
  ASSERT_EQ(charts.size(), 2U);
  EXPECT_EQ(transform(ideal, charts[0]).ideal, I("y'^4 - 4", charts[0].variables));
  EXPECT_EQ(transform(ideal, charts[1]).ideal, I("x'^2 - 1/4", charts[1].variables));
}

// [PAPER] Whitney: every chart lowers the invariant (2,3,3).
TEST(Blowup, WhitneyCharts) {
  const LocalIdeal ideal = I("x^2 + y^2*z", xyz);
  const auto r = canonical_center(ideal);
  const auto charts = canonical_blowup(r.center);
  ASSERT_EQ(charts.size(), 3U);
  for (const auto& ch : charts) {
    const auto t = transform(ideal, ch);
    EXPECT_LT(canonical_center(t.ideal).invariant, r.invariant) << ch.id << " " << t.ideal;
  }
}

TEST(BlowupProperty, PullbackMatchesEvaluation) {
  Random rnd(51);
  for (const auto& ideal : suite()) {
    const auto charts = canonical_blowup(canonical_center(ideal).center);
    for (const auto& ch : charts) {
      for (int trial = 0; trial < 10; ++trial) {
        const Polynomial f = rnd.polynomial(ideal.variables(), 4, 4);
        const auto c = rnd.point(ch.variables->size());
        const auto x = images_at(ch, c);
        if (!x) continue;
        const PolynomialFraction pf = pullback(f, ch);
        EXPECT_EQ(pf.num.evaluate(c) / pf.den.evaluate(c), f.evaluate(*x)) << ch.id << " " << f;
      }
    }
  }
}

TEST(BlowupProperty, TransformIsMuInvariantAndDivisible) {
  for (const auto& ideal : suite()) {
    const auto r = canonical_center(ideal);
    const auto d = ord(ideal).value();
    const LocalIdeal c = coefficient_ideal(ideal);
    for (const auto& ch : canonical_blowup(r.center)) {
      for (const auto& g : ideal.generators()) EXPECT_GE(exceptional_order(g, ch), Order(ch.n.get_ui())) << ch.id;
      const BigInt bound = ch.n * factorial(d - 1);
      for (const auto& g : c.generators()) EXPECT_GE(exceptional_order(g, ch), Order(bound.get_ui())) << ch.id;
      // Pullbacks are invariant; dividing by s^N leaves the character -N.
      for (const auto& g : ideal.generators()) EXPECT_EQ(mu_weight(pullback(g, ch).num, ch), BigInt(0)) << ch.id;
      BigInt expected = (-ch.n) % ch.mu_order;
      if (expected < 0) expected += ch.mu_order;
      for (const auto& g : transform(ideal, ch).ideal.generators()) {
        const auto w = mu_weight(g, ch);
        ASSERT_TRUE(w.has_value()) << ch.id << " " << g;
        EXPECT_EQ(*w, expected) << ch.id << " " << g;
      }
    }
  }
}

// The exceptional ideal is principal: t_i pulls back to s^{w_i} times a unit in chart i.
TEST(BlowupProperty, ExceptionalDivisorIsPrincipal) {
  for (const auto& ideal : suite()) {
    const auto r = canonical_center(ideal);
    const auto charts = canonical_blowup(r.center);
    for (std::size_t i = 0; i < charts.size(); ++i) {
      const Chart& ch = charts[i];
      const Polynomial t = r.center.frame().element(i);
      const auto w = ch.weights[i].get_ui();
      EXPECT_EQ(exceptional_order(t, ch), Order(w)) << ch.id;
      const Polynomial rest = pullback(t, ch).num.divide_by_variable_power(ch.exceptional, static_cast<unsigned>(w));
      EXPECT_FALSE(rest.constant_term().is_zero()) << ch.id << " " << rest;
      EXPECT_EQ(exceptional_order(t.pow(3), ch), Order(3 * w));
    }
  }
}

// In chart j != 1 the strict transform of t_1 is its pullback over s^{w_1}.
TEST(BlowupProperty, StrictTransformOfTheContact) {
  for (const auto& ideal : suite()) {
    const auto r = canonical_center(ideal);
    const auto charts = canonical_blowup(r.center);
    const Polynomial t1 = r.center.frame().element(0);
    for (std::size_t j = 1; j < charts.size(); ++j) {
      const Chart& ch = charts[j];
      EXPECT_EQ(exceptional_order(t1, ch), Order(ch.weights[0].get_ui())) << ch.id;
      const Polynomial st = strict_transform_hypersurface(t1, ch);
      EXPECT_EQ(st.order(), Order(1)) << ch.id << " " << st;
      EXPECT_TRUE(st.constant_term().is_zero()) << ch.id << " " << st;
    }
  }
}

TEST(Blowup, StrictTransformDividesTheMaximalPower) {
  const auto charts = canonical_blowup(canonical_center(I("x^2 + y^3", xy)).center);
  EXPECT_EQ(strict_transform_hypersurface(P("x^2 + y^3", xy), charts[0]), P("1 + y'^3", charts[0].variables));
  EXPECT_EQ(strict_transform_hypersurface(P("x*y^2", xy), charts[1]), P("x'", charts[1].variables));
  EXPECT_THROW(strict_transform_hypersurface(Polynomial(xy), charts[0]), ArithmeticError);
}

TEST(Blowup, RejectsNonAdmissibleIdeals) {
  const auto charts = canonical_blowup(WeightedCenter::coordinate(xy, {0, 1}, {Rational(2), Rational(3)}));
  EXPECT_THROW(transform(I("x + y^3", xy), charts[0]), AdmissibilityError);
  EXPECT_NO_THROW(transform(I("x^2, x*y^2, y^3", xy), charts[0]));
}

TEST(Blowup, ChartNamesAvoidClashes) {
  const Variables v = vars_of({"x", "y", "y'"});
  const auto charts = canonical_blowup(WeightedCenter::coordinate(v, {0, 1}, {Rational(1), Rational(2)}), "n");
  ASSERT_EQ(charts.size(), 2U);
  EXPECT_EQ(charts[0].id, "n/x");
  const auto& list = charts[0].variables->names();
  std::set<std::string> names(list.begin(), list.end());
  EXPECT_EQ(names.size(), 3U);
  EXPECT_TRUE(names.count("y'"));  // complement keeps its name
}
