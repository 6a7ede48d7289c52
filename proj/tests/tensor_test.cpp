#include <gtest/gtest.h>

#include "printers.hpp"
#include "pncalc/error.hpp"
#include "pncalc/parser.hpp"
#include "pncalc/random.hpp"
#include "pncalc/tensor.hpp"

namespace pncalc {
namespace {

const Chart c3({"x", "y", "z"});

RatFunc E(const char* text) { return parse_expr(text, c3); }

TEST(SortWithSign, Permutations) {
  IndexTuple a{2, 0, 1};
  EXPECT_EQ(sort_with_sign(a), 1);
  EXPECT_EQ(a, (IndexTuple{0, 1, 2}));
  IndexTuple b{1, 0};
  EXPECT_EQ(sort_with_sign(b), -1);
  IndexTuple c{1, 2, 1};
  EXPECT_EQ(sort_with_sign(c), 0);
}

TEST(AlternatingField, SignResolvedAccess) {
  Multivector p(c3, 2);
  p.set({2, 0}, E("x*y"));
  EXPECT_EQ(p.get({0, 2}), -E("x*y"));
  EXPECT_EQ(p.get({2, 0}), E("x*y"));
  EXPECT_TRUE(p.get({1, 1}).is_zero());
  p.add_to({0, 2}, E("x*y"));
  EXPECT_TRUE(p.is_zero());
  EXPECT_THROW(p.set({0, 3}, E("1")), IndexOutOfRange);
}

TEST(AlternatingField, DegreeAboveDimensionIsZero) {
  DiffForm w(c3, 4);
  EXPECT_TRUE(w.is_zero());
  DiffForm neg(c3, -1);
  EXPECT_TRUE(neg.is_zero());
}

TEST(AlternatingField, Printing) {
  const Multivector v = coordinate_vector(c3, 1);
  EXPECT_EQ(v.to_string(), "(0, 1, 0)");
  Multivector p(c3, 2);
  p.set({0, 1}, E("x"));
  p.set({1, 2}, E("-1"));
  EXPECT_EQ(p.to_string(), "{(1,2): x, (2,3): -1}");
  EXPECT_EQ(DiffForm::scalar(c3, E("x+1")).to_string(), "x + 1");
}

TEST(AlternatingField, ChartMismatch) {
  const Chart other({"u", "v", "w"});
  EXPECT_THROW(coordinate_vector(c3, 0) + coordinate_vector(other, 0), ChartMismatch);
}

TEST(Wedge, GradedCommutativity) {
  Rng rng(3);
  const DiffForm a = random_form(rng, c3, 1);
  const DiffForm b = random_form(rng, c3, 1);
  const DiffForm c = random_form(rng, c3, 2);
  EXPECT_EQ(wedge(a, b), -wedge(b, a));
  EXPECT_EQ(wedge(a, c), wedge(c, a));
  EXPECT_TRUE(wedge(a, a).is_zero());
  EXPECT_EQ(wedge(wedge(a, b), a), wedge(a, wedge(b, a)));
}

TEST(Wedge, CoordinateForms) {
  const DiffForm dxdy = wedge(coordinate_covector(c3, 0), coordinate_covector(c3, 1));
  EXPECT_EQ(dxdy.get({0, 1}), RatFunc(1L));
  EXPECT_EQ(dxdy.get({1, 0}), RatFunc(-1L));
}

TEST(Bivector, SharpAndEvaluation) {
  Multivector p(c3, 2);
  p.set({0, 1}, E("1"));
  // (P dx)^j = P^{xj}: d/dy.
  EXPECT_EQ(bivector_sharp(p, coordinate_covector(c3, 0)), coordinate_vector(c3, 1));
  EXPECT_EQ(bivector_eval(p, coordinate_covector(c3, 0), coordinate_covector(c3, 1)), RatFunc(1L));
  EXPECT_EQ(bivector_eval(p, coordinate_covector(c3, 1), coordinate_covector(c3, 0)), RatFunc(-1L));
}

TEST(Endo, ProductsAndTrace) {
  EndoField n(c3);
  n.set(0, 0, E("x"));
  n.set(0, 1, E("y"));
  n.set(2, 2, E("2"));
  const EndoField n2 = endo_power(n, 2);
  EXPECT_EQ(n2.at(0, 1), E("x*y"));
  EXPECT_EQ(endo_trace(n2), E("x^2 + 4"));
  EXPECT_EQ(endo_power(n, 0), EndoField::identity(c3));
  EXPECT_EQ(endo_compose(n, EndoField::identity(c3)), n);
  // (N X)^i = N^i_j X^j and (N* a)_j = N^i_j a_i.
  EXPECT_EQ(endo_apply(n, coordinate_vector(c3, 1)).get({0}), E("y"));
  EXPECT_EQ(endo_transpose_apply(n, coordinate_covector(c3, 0)).get({1}), E("y"));
}

TEST(Endo, TransposeIsAdjoint) {
  Rng rng(11);
  const EndoField n = random_endo(rng, c3, 1);
  const Multivector x = random_multivector(rng, c3, 1);
  const DiffForm a = random_form(rng, c3, 1);
  EXPECT_EQ(pairing(a, endo_apply(n, x)), pairing(endo_transpose_apply(n, a), x));
}

TEST(Endo, BivectorSkewness) {
  Multivector p(c3, 2);
  p.set({0, 1}, E("1"));
  // N = diag(x, x, z) commutes with P; adding N^1_2 = y breaks it.
  EndoField n = EndoField::diagonal(c3, std::vector<RatFunc>{E("x"), E("x"), E("z")});
  EXPECT_TRUE(is_skew(endo_bivector(n, p)));
  EXPECT_EQ(to_bivector(endo_bivector(n, p)).get({0, 1}), E("x"));
  n.set(0, 1, E("y"));
  EXPECT_FALSE(is_skew(endo_bivector(n, p)));
  EXPECT_THROW(to_bivector(endo_bivector(n, p)), NotSkew);
}

TEST(Pairing, TopDegree) {
  DiffForm w(c3, 3);
  w.set({0, 1, 2}, E("2"));
  Multivector a(c3, 3);
  a.set({2, 1, 0}, E("x"));
  EXPECT_EQ(pairing(w, a), E("-2*x"));
}

}  // namespace
}  // namespace pncalc
