#include <gtest/gtest.h>

#include "bihom/errors.hpp"
#include "bihom/expression.hpp"

using namespace bihom;

namespace {

FieldElement eval(const char* text, const Environment& env = {}, Field f = Field::rational()) {
  return Expression::parse(text).evaluate(env, f);
}

}  // namespace

TEST(Expression, ArithmeticAndPrecedence) {
  EXPECT_EQ(eval("1+2*3").to_string(), "7");
  EXPECT_EQ(eval("(1+2)*3").to_string(), "9");
  EXPECT_EQ(eval("-2^2").to_string(), "-4");
  EXPECT_EQ(eval("2^-1").to_string(), "1/2");
  EXPECT_EQ(eval("7/2-1").to_string(), "5/2");
  const Environment env{{"a", FieldElement::integer(2)}, {"x", FieldElement::integer(3)},
                        {"k", FieldElement::integer(1)}, {"l", FieldElement::integer(2)}};
  EXPECT_EQ(eval("c/(a^k*x^l)", {{"c", FieldElement::one(Field::rational())}, {"a", env.at("a")}, {"x", env.at("x")},
                                  {"k", env.at("k")}, {"l", env.at("l")}})
                .to_string(),
            "1/18");
}

TEST(Expression, BooleansAndGuards) {
  const Environment env{{"k", FieldElement::integer(0)}, {"l", FieldElement::integer(2)},
                        {"z1", FieldElement::integer(-1)}};
  const Field q = Field::rational();
  EXPECT_TRUE(Expression::parse("k==0 && l!=0").holds(env, q));
  EXPECT_FALSE(Expression::parse("!(k==0 && l==2)").holds(env, q));
  EXPECT_TRUE(Expression::parse("k==1 || z1==-1").holds(env, q));
  EXPECT_TRUE(Expression::parse("l>=2 && l<3 && k<=0 && l>k").holds(env, q));
}

TEST(Expression, OverPrimeField) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(eval("3*4", {}, f5).residue(), 2u);
  EXPECT_EQ(eval("1/2", {}, f5).residue(), 3u);
}

TEST(Expression, Identifiers) {
  const auto ids = Expression::parse("(l*z+k)*c1 - d2").identifiers();
  EXPECT_EQ(ids, (std::set<std::string>{"c1", "d2", "k", "l", "z"}));
}

TEST(Expression, Errors) {
  EXPECT_THROW(Expression::parse("1+"), parse_error);
  EXPECT_THROW(Expression::parse("(1"), parse_error);
  EXPECT_THROW(Expression::parse("1 $ 2"), parse_error);
  EXPECT_THROW(eval("y+1"), error);
  EXPECT_THROW(eval("2^(1/2)"), error);
  EXPECT_THROW(eval("1/0"), error);
}
