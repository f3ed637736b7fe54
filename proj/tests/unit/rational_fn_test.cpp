#include "redalg/rational_fn.hpp"

#include <gtest/gtest.h>

#include <random>

#include "redalg/errors.hpp"

namespace redalg {
namespace {

RationalFn h(int i) { return RationalFn::variable(i); }

RationalFn random_fn(std::mt19937& rng, int vars) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> var(0, vars - 1);
  auto lin = [&] {
    RationalFn r(coef(rng));
    for (int k = 0; k < 2; ++k) r += RationalFn(coef(rng)) * h(var(rng));
    return r;
  };
  RationalFn d = lin();
  if (d.is_zero()) d = h(0) + 7;
  return (lin() * lin() + RationalFn(coef(rng))) / d;
}

TEST(RationalFn, Examples) {
  EXPECT_TRUE(((h(0) + 1) / (h(0) + 1)).is_one());
  EXPECT_EQ(RationalFn(1) / (h(0) + 2) + RationalFn(1) / (h(0) + 3),
            (2 * h(0) + 5) / ((h(0) + 2) * (h(0) + 3)));
  EXPECT_EQ((h(0) * h(0) - 1) / (h(0) + 1), h(0) - 1);
  EXPECT_THROW(h(0) / RationalFn(), ArithmeticError);
}

TEST(RationalFn, CanonicalSign) {
  const RationalFn r = RationalFn(1) / (RationalFn(-2) - h(0));
  EXPECT_EQ(r.to_string(), "-1/(h1 + 2)");
  EXPECT_EQ(r, -(RationalFn(1) / (h(0) + 2)));
  EXPECT_EQ((RationalFn(2) / RationalFn(4)).to_string(), "1/2");
}

TEST(RationalFn, ShiftExamples) {
  const long zero[] = {0};
  EXPECT_EQ(h(0).shifted(zero), h(0));
  const long m2[] = {-2};
  EXPECT_EQ((RationalFn(1) / (h(0) + 2)).shifted(m2), RationalFn(1) / h(0));
  const mpq_class half[] = {mpq_class(1, 2)};
  EXPECT_EQ((RationalFn(1) / h(0)).shifted(half), RationalFn(2) / (2 * h(0) + 1));
}

TEST(RationalFn, ParsePrintRoundTrip) {
  const RationalFn r = RationalFn::parse("(h1^2 - 1)/(h1 + 1) + 1/(2*(h2+3))");
  EXPECT_EQ(r, h(0) - 1 + RationalFn(1) / (2 * h(1) + 6));
  EXPECT_EQ(RationalFn::parse(r.to_string()), r);
  EXPECT_THROW(RationalFn::parse("h1 + * 2"), ParseError);
  try {
    RationalFn::parse("h1 + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
}

TEST(RationalFn, FieldAxiomsRandomized) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 60; ++t) {
    const RationalFn a = random_fn(rng, 3);
    const RationalFn b = random_fn(rng, 3);
    const RationalFn c = random_fn(rng, 3);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(RationalFn::parse(a.to_string()), a);
  }
}

TEST(RationalFn, ShiftIsHomomorphism) {
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    const RationalFn a = random_fn(rng, 3);
    const RationalFn b = random_fn(rng, 3);
    const long mu[] = {1, -2, 3};
    const long nu[] = {-4, 0, 1};
    const long sum[] = {-3, -2, 4};
    EXPECT_EQ((a * b).shifted(mu), a.shifted(mu) * b.shifted(mu));
    EXPECT_EQ((a + b).shifted(mu), a.shifted(mu) + b.shifted(mu));
    EXPECT_EQ(a.shifted(mu).shifted(nu), a.shifted(sum));
  }
}

}  // namespace
}  // namespace redalg
