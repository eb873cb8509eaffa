#include <gtest/gtest.h>

#include "res3/error.hpp"
#include "res3/expr.hpp"

using namespace res3;

namespace {

Poly P(const Field& f, std::vector<int> c) { return Poly::from_ints(f, c); }

}  // namespace

TEST(Expr, IntegersReduceModThree) {
  const Field& f = gf(1);
  EXPECT_EQ(eval_t("5", f, {}), P(f, {2}));
  EXPECT_EQ(eval_t("3t^2 + 4t", f, {}), P(f, {0, 1}));
}

TEST(Expr, JuxtapositionAndPowers) {
  const Field& f = gf(1);
  EXPECT_EQ(eval_t("2t(t+1)^2", f, {}), P(f, {0, 2, 4, 2}));
  EXPECT_EQ(eval_t("t^(3) - -t", f, {}), P(f, {0, 1, 0, 1}));
}

TEST(Expr, NamedConstants) {
  const Field& f = gf(2);
  Elem i = f.gen();
  ASSERT_TRUE((i * i + f.one()).is_zero());
  Assignment a{{'i', i}};
  Poly p = eval_t("t^2 i + (1-i)", f, a);
  EXPECT_EQ(p.coeff(2), i);
  EXPECT_EQ(p.coeff(0), f.one() - i);
  EXPECT_THROW(eval_t("c t", f, a), ParseError);
}

TEST(Expr, DivisionByConstantsAndExactFactors) {
  const Field& f = gf(1);
  EXPECT_EQ(eval_t("t/2", f, {}), P(f, {0, 2}));
  EXPECT_EQ(eval_t("(t^2-1)/(t+1)", f, {}), P(f, {2, 1}));
  EXPECT_THROW(eval_t("t^2/(t+1)", f, {}), ArithmeticError);
  EXPECT_THROW(eval_t("t/0", f, {}), ArithmeticError);
}

TEST(Expr, BracketLiteral) {
  const Field& f = gf(1);
  EXPECT_EQ(eval_t("[1;0;2]^2", f, {}), P(f, {1, 0, 4, 0, 4}));
}

TEST(Expr, XYieldsCoefficientsInT) {
  const Field& f = gf(1);
  XTPoly w = eval_xt("x^3 + t x^2 + t^2(x+1)", f, {});
  ASSERT_EQ(w.x_degree(), 3);
  EXPECT_EQ(w.coeff(2), P(f, {0, 1}));
  EXPECT_EQ(w.coeff(1), P(f, {0, 0, 1}));
  EXPECT_EQ(w.coeff(0), P(f, {0, 0, 1}));
  EXPECT_THROW(eval_t("x t", f, {}), ParseError);
}

TEST(Expr, SyntaxErrors) {
  const Field& f = gf(1);
  EXPECT_THROW(eval_t("(t+1", f, {}), ParseError);
  EXPECT_THROW(eval_t("t+1)", f, {}), ParseError);
  EXPECT_THROW(eval_t("t^", f, {}), ParseError);
}

TEST(Expr, Symbols) {
  EXPECT_EQ(expr_symbols("x^3 + a t^2 + d^2 i"), (std::set<char>{'a', 'd', 'i'}));
}

TEST(Constraints, RootsOfMinimalPolynomial) {
  ConstraintSet cs = parse_constraints("d^3-d^2-1=0");
  // d^3 - d^2 - 1 = (d - 2)(d^2 + d + 2); the quadratic splits in GF(9).
  int n = 0;
  auto count = [&](const Assignment& a) {
    const Elem& d = a.at('d');
    EXPECT_TRUE((d * d * d - d * d - d.field().one()).is_zero());
    ++n;
    return false;
  };
  for_each_solution(cs, {}, gf(1), count);
  EXPECT_EQ(n, 1);
  n = 0;
  for_each_solution(cs, {}, gf(2), count);
  EXPECT_EQ(n, 3);
}

TEST(Constraints, InequationsAndFreeSymbols) {
  ConstraintSet cs = parse_constraints("a != 0; a != 1");
  std::vector<Elem> seen;
  for_each_solution(cs, {'a'}, gf(1), [&](const Assignment& a) {
    seen.push_back(a.at('a'));
    return false;
  });
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_EQ(seen[0], gf(1).from_int(2));
}

TEST(Constraints, CapStopsEnumeration) {
  int n = 0;
  bool hit = for_each_solution({}, {'a', 'b'}, gf(2), [&](const Assignment&) {
    ++n;
    return false;
  }, 10);
  EXPECT_FALSE(hit);
  EXPECT_EQ(n, 10);
}

TEST(Constraints, Malformed) {
  EXPECT_THROW(parse_constraints("a = b = c"), ParseError);
  EXPECT_THROW(parse_constraints("a + b"), ParseError);
}
