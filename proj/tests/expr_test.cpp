#include <gtest/gtest.h>

#include "pncalc/error.hpp"
#include "pncalc/parser.hpp"
#include "pncalc/random.hpp"

namespace pncalc {
namespace {

const Chart xy({"x", "y"});
const Chart xyz({"x", "y", "z"});

RatFunc E(const char* text, const Chart& chart = xy) { return parse_expr(text, chart); }

TEST(Parser, ZeroIsCanonical) {
  const RatFunc z = E("0");
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.denominator().is_one());
  EXPECT_EQ(E("x - x"), z);
  EXPECT_EQ(E("0/(x+1)"), z);
}

TEST(Parser, CancelsCommonFactor) {
  const RatFunc q = E("(x^2 - y^2)/(x - y)");
  EXPECT_EQ(q, E("x + y"));
  // Multiply back by the divisor.
  EXPECT_EQ(q * E("x - y"), E("x^2 - y^2"));
}

TEST(Parser, UnknownIdentifier) {
  try {
    E("x + w");
    FAIL() << "expected UnknownIdentifier";
  } catch (const UnknownIdentifier& e) {
    EXPECT_EQ(e.name(), "w");
  }
}

TEST(Parser, Precedence) {
  EXPECT_EQ(E("-x^2"), -(E("x") * E("x")));
  EXPECT_EQ(E("2/3^2"), RatFunc(Rational(4, 9)));
  EXPECT_EQ(E("x/2/y"), E("x") / E("2*y"));
  EXPECT_EQ(E("1 - x - y"), RatFunc(1L) - E("x") - E("y"));
  EXPECT_EQ(E("x^-1"), E("1/x"));
  EXPECT_EQ(E("  ( x+ y ) ^ 2 "), E("x^2 + 2*x*y + y^2"));
}

TEST(Parser, SyntaxErrorsCarryPosition) {
  try {
    E("2x");
    FAIL() << "implicit multiplication must be rejected";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 1U);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(E("x +"), SyntaxError);
  EXPECT_THROW(E("(x"), SyntaxError);
  EXPECT_THROW(E("exp(x)"), SyntaxError);
  EXPECT_THROW(E("x ^ y"), SyntaxError);
  EXPECT_THROW(E(""), SyntaxError);
  EXPECT_THROW(E("1.5"), SyntaxError);
}

TEST(Parser, LiteralDivisionByZero) {
  EXPECT_THROW(E("1/0"), DivisionByZeroConstant);
  EXPECT_THROW(E("x/(y - y)"), DivisionByZero);
  EXPECT_THROW(E("0^-1"), DivisionByZero);
}

TEST(Arith, Examples) {
  EXPECT_TRUE(ratfunc_arith(ArithOp::add, E("x"), E("-x")).is_zero());
  EXPECT_EQ(ratfunc_arith(ArithOp::mul, E("1/x"), E("x")), RatFunc(1L));
  EXPECT_EQ(ratfunc_arith(ArithOp::pow, E("x+y"), RatFunc(2L)), E("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(ratfunc_arith(ArithOp::pow, E("x+y"), RatFunc(-1L)), E("1/(x+y)"));
  EXPECT_THROW(ratfunc_arith(ArithOp::div, E("x"), E("0")), DivisionByZero);
  EXPECT_THROW(ratfunc_arith(ArithOp::pow, E("x"), E("1/2")), Error);
}

TEST(Arith, CanonicalDenominatorIsMonic) {
  const RatFunc q = E("(2*x + 2)/(4*y - 2)");
  EXPECT_EQ(q.denominator().leading_coeff(), Rational(1));
  EXPECT_EQ(q, E("(x + 1)/(2*y - 1)"));
}

TEST(Partial, Examples) {
  EXPECT_EQ(partial_deriv(E("x^2*y"), 0, xy), E("2*x*y"));
  EXPECT_EQ(partial_deriv(E("1/x"), 0, xy), E("-1/x^2"));
  EXPECT_TRUE(partial_deriv(E("x"), 1, xy).is_zero());
  EXPECT_THROW(partial_deriv(E("x"), 2, xy), IndexOutOfRange);
}

TEST(IsZero, Examples) {
  EXPECT_TRUE(is_zero(E("(x+y)^2 - x^2 - 2*x*y - y^2")));
  EXPECT_FALSE(is_zero(E("x - y")));
  EXPECT_TRUE(is_zero(E("(x^2-1)/(x-1) - (x+1)")));
}

TEST(EvalAt, Examples) {
  const std::vector<Rational> p1 = {Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(eval_at(E("x+y"), p1, xy), Rational(5, 6));
  const std::vector<Rational> p2 = {Rational(0), Rational(1)};
  EXPECT_THROW(eval_at(E("1/x"), p2, xy), PoleAtPoint);
  const std::vector<Rational> p3 = {Rational(3), Rational(0)};
  EXPECT_EQ(eval_at(E("x^2"), p3, xy), Rational(9));
  const std::vector<Rational> short_point = {Rational(1)};
  EXPECT_THROW(eval_at(E("x"), short_point, xy), Error);
}

TEST(Printing, Format) {
  EXPECT_EQ(E("2*x").to_string(xy), "2*x");
  EXPECT_EQ(E("x^2 - 2*x*y + 1/2").to_string(xy), "x^2 - 2*x*y + 1/2");
  EXPECT_EQ(E("-1").to_string(xy), "-1");
  EXPECT_EQ(E("0").to_string(xy), "0");
}

TEST(Gcd, Multivariate) {
  const Polynomial a = E("(x + y)^2 * (x - 2*y + 1)", xyz).numerator();
  const Polynomial b = E("(x + y) * (x*z - 1) * (x - 2*y + 1)", xyz).numerator();
  EXPECT_EQ(gcd(a, b), E("(x + y) * (x - 2*y + 1)", xyz).numerator().monic());
  EXPECT_EQ(gcd(Polynomial(), Polynomial()), Polynomial());
}

// ---------------------------------------------------------------------------
// Properties over seeded random rational functions.

class ExprProperties : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  RatFunc sample(Rng& rng) { return random_ratfunc(rng, 3, 2); }
};

TEST_P(ExprProperties, RingAxioms) {
  Rng rng(derive_seed(GetParam(), "ring"));
  const RatFunc a = sample(rng), b = sample(rng), c = sample(rng);
  EXPECT_TRUE(is_zero((a * b) * c - a * (b * c)));
  EXPECT_TRUE(is_zero((a + b) + c - (a + (b + c))));
  EXPECT_TRUE(is_zero(a * (b + c) - (a * b + a * c)));
  EXPECT_TRUE(is_zero(a * b - b * a));
  if (!b.is_zero()) EXPECT_TRUE(is_zero((a / b) * b - a));
}

TEST_P(ExprProperties, ResultsStayReduced) {
  Rng rng(derive_seed(GetParam(), "reduced"));
  const RatFunc a = sample(rng), b = sample(rng), c = sample(rng);
  for (const RatFunc& r : {a + b, a * b - c, a + b * c, (a + b) + (b + c)}) {
    EXPECT_TRUE(gcd(r.numerator(), r.denominator()).is_one()) << r.to_string(xyz);
    EXPECT_EQ(r.denominator().leading_coeff(), Rational(1));
  }
}

TEST_P(ExprProperties, PartialsCommute) {
  Rng rng(derive_seed(GetParam(), "commute"));
  const RatFunc f = sample(rng);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(f.partial(i).partial(j), f.partial(j).partial(i));
}

TEST_P(ExprProperties, Leibniz) {
  Rng rng(derive_seed(GetParam(), "leibniz"));
  const RatFunc f = sample(rng), g = sample(rng);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_TRUE(is_zero((f * g).partial(i) - f * g.partial(i) - g * f.partial(i)));
}

TEST_P(ExprProperties, EvaluationIsAHomomorphism) {
  Rng rng(derive_seed(GetParam(), "eval"));
  const RatFunc f = sample(rng), g = sample(rng);
  const std::vector<Rational> point = {Rational(static_cast<long>(rng.below(7)) - 3, 2),
                                       Rational(static_cast<long>(rng.below(7)) + 1, 3),
                                       Rational(static_cast<long>(rng.below(5)) - 2, 5)};
  try {
    const Rational ef = f.eval_at(point), eg = g.eval_at(point);
    EXPECT_EQ((f * g).eval_at(point), ef * eg);
    EXPECT_EQ((f + g).eval_at(point), ef + eg);
  } catch (const PoleAtPoint&) {
    // Not a point of the common domain; nothing to compare.
  }
}

TEST_P(ExprProperties, PrintParseRoundTrip) {
  Rng rng(derive_seed(GetParam(), "roundtrip"));
  const RatFunc f = sample(rng);
  EXPECT_EQ(parse_expr(f.to_string(xyz), xyz), f) << f.to_string(xyz);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ExprProperties, ::testing::Range<std::uint64_t>(0, 25));

}  // namespace
}  // namespace pncalc
