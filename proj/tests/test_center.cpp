#include "support.hpp"

#include <wblowup/errors.hpp>

#include <gtest/gtest.h>

using namespace wbtest;

namespace {

const Variables xy = vars_of({"x", "y"});
const Variables xyz = vars_of({"x", "y", "z"});

WeightedCenter coord(const Variables& vars, std::vector<std::size_t> slots, std::vector<Rational> d) {
  return WeightedCenter::coordinate(vars, slots, std::move(d));
}

// [(x + 1/2 y^2)^2, y^4], the presentation from the paper's remark on maximal contact.
WeightedCenter tail_center() {
  FrameEntry t1{0, P("1/2*y^2", xy), P("1", xy)};
  FrameEntry t2{1, Polynomial(xy), P("1", xy)};
  return WeightedCenter(Frame(xy, LinearChange::identity(2), {t1, t2}), {Rational(2), Rational(4)});
}

}  // namespace

TEST(Invariant, Ordering) {
  EXPECT_LT(inv({2, 3}), inv({2}));  // (2,3,inf) < (2,inf)
  EXPECT_LT(inv({1}), inv({2, 3}));
  EXPECT_LT(Invariant::trivial(), inv({1}));
  EXPECT_LT(inv({2, 3, 3}), inv({2, 3}));
  EXPECT_GT(inv({}), inv({5, 7}));  // (inf) is the largest
  EXPECT_EQ(inv({2, 3}).to_string(), "(2, 3, inf)");
  EXPECT_EQ(Invariant::trivial().to_string(), "(0)");
  EXPECT_EQ(inv({}).to_string(), "(inf)");
  EXPECT_THROW(inv({3, 2}), InternalError);
}

// [PAPER] e = (2,3,6) for the Whitney umbrella's (2,3,3).
TEST(Invariant, RawOrders) {
  EXPECT_EQ(*inv({2, 3, 3}).raw_orders(), (std::vector<BigInt>{2, 3, 6}));
  EXPECT_EQ(*inv({5, 7}).raw_orders(), (std::vector<BigInt>{5, 168}));
  EXPECT_EQ(inv({2, 3}).in_q1(), true);
  EXPECT_EQ(Invariant::of({Rational(2), Rational(5, 2)}).in_q1(), false);
  EXPECT_EQ(Invariant::of({Rational(3), Rational(7, 2)}).in_q1(), true);  // e2 = 7/2 * 2! = 7
}

TEST(WeightedCenter, NAndWeights) {
  EXPECT_EQ(coord(xy, {0, 1}, {2, 3}).n(), 6);
  EXPECT_EQ(coord(xy, {0, 1}, {2, 3}).blowup_weights(), (std::vector<BigInt>{3, 2}));
  EXPECT_EQ(coord(xyz, {0, 2, 1}, {2, 3, 3}).blowup_weights(), (std::vector<BigInt>{3, 2, 2}));
  const auto c = coord(xy, {0, 1}, {Rational(2), Rational(5, 2)});
  EXPECT_EQ(c.n(), 10);
  EXPECT_EQ(c.blowup_weights(), (std::vector<BigInt>{5, 4}));
}

TEST(Valuation, MatchesTermwiseOracleOnCoordinateCenters) {
  Random rnd(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> d{Rational(rnd.integer(1, 4)), Rational(rnd.integer(4, 8), rnd.integer(1, 2))};
    std::sort(d.begin(), d.end());
    const std::vector<std::size_t> slots{static_cast<std::size_t>(rnd.integer(0, 1)) * 2, 1};
    const auto c = coord(xyz, slots, d);
    const Polynomial f = rnd.polynomial(xyz, 5, 5);
    EXPECT_EQ(nu(c, f), coordinate_nu(slots, d, f)) << f;
  }
}

// [PAPER] x^2 + x y^2 = t^2 - y^4/4 for t = x + y^2/2, so it lies in the center.
TEST(Valuation, TailFrame) {
  const auto c = tail_center();
  EXPECT_EQ(nu(c, P("x", xy)), WeightedValue(Rational(1, 2)));
  EXPECT_EQ(nu(c, P("x^2 + x*y^2", xy)), WeightedValue(Rational(1)));
  EXPECT_EQ(nu(c, P("x + 1/2*y^2", xy)), WeightedValue(Rational(1, 2)));
  EXPECT_EQ(nu(c, P("y", xy)), WeightedValue(Rational(1, 4)));
  EXPECT_TRUE(admissible(c, I("x^2 + x*y^2", xy)));
  EXPECT_FALSE(admissible(coord(xy, {0, 1}, {2, 4}), I("x^2 + x*y", xy)));
}

TEST(ValuationProperty, Axioms) {
  Random rnd(32);
  for (int trial = 0; trial < 200; ++trial) {
    FrameEntry e1{0, rnd.coin() ? P("y^2 - 2*z", xyz) : Polynomial(xyz), P("1", xyz)};
    FrameEntry e2{1, rnd.coin() ? P("z^2", xyz) : Polynomial(xyz), P("1", xyz)};
    const Rational d1(rnd.integer(1, 3));
    const WeightedCenter c(Frame(xyz, LinearChange::identity(3), {e1, e2}),
                           {d1, d1 + Rational(rnd.integer(0, 5), rnd.integer(1, 2))});
    const Polynomial f = rnd.polynomial(xyz, 4, 4);
    const Polynomial g = rnd.polynomial(xyz, 4, 4);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ(nu(c, f * g).value(), nu(c, f).value() + nu(c, g).value());
    EXPECT_GE(nu(c, f + g), std::min(nu(c, f), nu(c, g)));
    EXPECT_EQ(nu(c, f.pow(3)).value(), Rational(3) * nu(c, f).value());
  }
}

TEST(Rounding, MatchesBruteForce) {
  Random rnd(33);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> d;
    for (long k = rnd.integer(1, 3); k > 0; --k) d.emplace_back(rnd.integer(1, 9), rnd.integer(1, 2));
    std::sort(d.begin(), d.end());
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < d.size(); ++i) slots.push_back(i);
    auto got = rounding_exponents(coord(xyz, slots, d));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, brute_force_rounding(d));
  }
}

// [PAPER] [x^2, y^4] = (x^2, x y^2, y^4).
TEST(Rounding, PaperExample) {
  EXPECT_EQ(rounding(coord(xy, {0, 1}, {2, 4})), I("x^2, x*y^2, y^4", xy));
  EXPECT_EQ(rounding(coord(xy, {0, 1}, {2, 3})), I("x^2, x*y^2, y^3", xy));
}

TEST(Rounding, MembershipLaw) {
  for (const auto& c : {coord(xyz, {0, 1, 2}, {2, 3, 3}), coord(xy, {0, 1}, {2, 4}), tail_center(),
                        coord(xy, {0, 1}, {Rational(2), Rational(7, 2)})}) {
    const LocalIdeal r = rounding(c);
    std::optional<WeightedValue> least;
    for (const auto& g : r.generators()) {
      EXPECT_GE(nu(c, g), WeightedValue(Rational(1))) << g;
      if (!least || nu(c, g) < *least) least = nu(c, g);
    }
    EXPECT_EQ(*least, WeightedValue(Rational(1)));
  }
}

TEST(CenterEqual, PresentationsOfTheSameCenter) {
  EXPECT_TRUE(center_equal(coord(xy, {0, 1}, {2, 4}), tail_center()));
  // Theorem on presentations: any t with nu(t) = 1/d_1 can replace t_1.
  FrameEntry t1{0, P("y^3 - 5*y^2", xy), P("1", xy)};
  FrameEntry t2{1, Polynomial(xy), P("1", xy)};
  const WeightedCenter other(Frame(xy, LinearChange::identity(2), {t1, t2}), {Rational(2), Rational(4)});
  EXPECT_TRUE(center_equal(coord(xy, {0, 1}, {2, 4}), other));
  FrameEntry bad{0, P("y", xy), P("1", xy)};
  const WeightedCenter moved(Frame(xy, LinearChange::identity(2), {bad, t2}), {Rational(2), Rational(4)});
  EXPECT_FALSE(center_equal(coord(xy, {0, 1}, {2, 4}), moved));
  EXPECT_FALSE(center_equal(coord(xy, {0, 1}, {2, 4}), coord(xy, {0, 1}, {2, 3})));
}

TEST(Frame, RejectsNonTriangularEntries) {
  FrameEntry own{0, P("x^2", xy), P("1", xy)};
  EXPECT_THROW(Frame(xy, LinearChange::identity(2), {own}), TriangularizationError);
  FrameEntry a{0, P("y^2", xy), P("1", xy)};
  FrameEntry b{1, P("x", xy), P("1", xy)};
  EXPECT_THROW(Frame(xy, LinearChange::identity(2), {a, b}), TriangularizationError);
  FrameEntry unit{0, P("1 + y", xy), P("1", xy)};
  EXPECT_THROW(Frame(xy, LinearChange::identity(2), {unit}), TriangularizationError);
}

// Oracle: g(t(z), z_rest) = f(A z) with t evaluated numerically.
TEST(FrameProperty, RewriteMatchesEvaluation) {
  Random rnd(34);
  for (int trial = 0; trial < 40; ++trial) {
    FrameEntry e1{1, P("x^2 - z", xyz), P("1", xyz)};
    FrameEntry e2{0, P("3*z^2", xyz), P("1", xyz)};
    const Frame frame(xyz, LinearChange(rnd.invertible(3)), {e1, e2});
    const Polynomial f = rnd.polynomial(xyz, 3, 4);
    const Polynomial g = rewrite_in_frame(f, frame);
    const auto z = rnd.point(3);
    std::vector<Rational> x(3, Rational(0));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) x[i] += frame.coords().matrix()[i][j] * z[j];
    }
    std::vector<Rational> w = z;
    w[1] = z[1] + e1.num.evaluate(z);
    w[0] = z[0] + e2.num.evaluate(z);
    EXPECT_EQ(g.evaluate(w), f.evaluate(x));
  }
}

TEST(FrameProperty, DenominatorEntriesClearAUnit) {
  FrameEntry e{0, P("y^2", xy), P("1 + y", xy)};
  const Frame frame(xy, LinearChange::identity(2), {e});
  // x = t - y^2/(1+y): (1+y)^2 * x^2 becomes (t(1+y) - y^2)^2.
  const Polynomial g = rewrite_in_frame(P("x^2", xy), frame);
  EXPECT_EQ(g, P("(x*(1+y) - y^2)^2", xy));
}
