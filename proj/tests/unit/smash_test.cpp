#include "redalg/smash.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "redalg/errors.hpp"
#include "test_support.hpp"

namespace redalg {
namespace {

TEST(Smash, Sl2Bracket) {
  auto alg = Algebra::create(RootSystem::build(Family::A, 1), ModuleKind::Adjoint);
  auto g = alg->full();
  const Element e = Element::letter(g, *alg->find_letter("E[1]"));
  const Element f = Element::letter(g, *alg->find_letter("F[1]"));
  const Element fe = Element::monomial(g, Word{static_cast<char>(*alg->find_letter("F[1]")), static_cast<char>(*alg->find_letter("E[1]"))});
  const Element h = Element::scalar(g, RationalFn::parse("h1 - h2"));
  EXPECT_EQ(e * f, fe + h) << (e * f).to_string();
}

TEST(Smash, WeylRelation) {
  auto alg = Algebra::create(RootSystem::build(Family::C, 2), ModuleKind::Weyl);
  auto g = alg->full();
  const Element x1 = Element::letter(g, *alg->find_letter("x[1]"));
  const Element d1 = Element::letter(g, *alg->find_letter("d[1]"));
  EXPECT_EQ((d1 * x1).to_string(), "1 + x[1]*d[1]");
}

TEST(Smash, ActExamples) {
  auto alg = testing::make(Family::C, 2, ModuleKind::Weyl);
  auto g = alg->full();
  const Element e12 = Element::letter(g, *alg->find_letter("E[1,0]"));
  const Element x2 = Element::letter(g, *alg->find_letter("x[2]"));
  EXPECT_EQ(act(e12, x2).to_string(), "x[1]");
  EXPECT_TRUE(act(e12, Element::scalar(g, RationalFn(1))).is_zero());
  const Element h = Element::scalar(g, RationalFn::variable(1));
  EXPECT_EQ(act(h, x2), x2);
  EXPECT_THROW(act(x2, x2), ContextError);
}

TEST(Smash, CartanCrossRelation) {
  auto alg = testing::make(Family::A, 1, ModuleKind::Adjoint);
  auto g = alg->full();
  const Element e = Element::letter(g, *alg->find_letter("E[1]"));
  const RationalFn q = RationalFn(1) / (RationalFn::variable(0) + RationalFn(2));
  // e q(h) = q(h - alpha) e with alpha = eps1 - eps2.
  EXPECT_EQ(e * Element::scalar(g, q), e.scaled(RationalFn(1) / (RationalFn::variable(0) + RationalFn(1))));
  EXPECT_EQ(theta(e).to_string(), "F[1]");
  EXPECT_EQ(theta(Element::scalar(g, RationalFn::variable(0))).to_string(), "h1");
}

TEST(Smash, ContextMismatch) {
  auto a = testing::make(Family::A, 1, ModuleKind::Adjoint);
  auto b = testing::make(Family::A, 1, ModuleKind::Adjoint);
  EXPECT_THROW(Element::scalar(a->full(), 1) * Element::scalar(b->full(), 1), ContextError);
}

struct Case {
  const char* name;
  Family family;
  int rank;
  ModuleKind kind;
  std::optional<std::vector<int>> S;
};

class SmashProperties : public ::testing::TestWithParam<Case> {};

TEST_P(SmashProperties, Associativity) {
  const Case& c = GetParam();
  auto alg = testing::make(c.family, c.rank, c.kind, c.S);
  auto g = alg->full();
  const auto pool = testing::letters_of(g, true, true);
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Element a = testing::random_element(rng, g, pool, 3);
    const Element b = testing::random_element(rng, g, pool, 3);
    const Element d = testing::random_element(rng, g, pool, 3);
    ASSERT_EQ((a * b) * d, a * (b * d)) << a.to_string() << " | " << b.to_string() << " | " << d.to_string();
  }
}

TEST_P(SmashProperties, CanonicalFormIsIdempotent) {
  const Case& c = GetParam();
  auto alg = testing::make(c.family, c.rank, c.kind, c.S);
  auto g = alg->full();
  const auto pool = testing::letters_of(g, true, true);
  std::mt19937 rng(5);
  const Element one = Element::scalar(g, RationalFn(1));
  for (int t = 0; t < 30; ++t) {
    const Element a = testing::random_element(rng, g, pool, 3);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(one * a, a);
    for (const auto& [w, q] : a.terms()) EXPECT_TRUE(alg->is_normal(w));
  }
}

TEST_P(SmashProperties, DerivationProperty) {
  const Case& c = GetParam();
  auto alg = testing::make(c.family, c.rank, c.kind, c.S);
  auto g = alg->full();
  const auto bpool = testing::letters_of(g, false, true);
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    const Element b1 = testing::random_element(rng, g, bpool, 2, 2, testing::Coeffs::Constant);
    const Element b2 = testing::random_element(rng, g, bpool, 2, 2, testing::Coeffs::Constant);
    const int x = static_cast<int>(rng() % alg->lie().basis_size());
    EXPECT_EQ(act_basis(x, b1 * b2), act_basis(x, b1) * b2 + b1 * act_basis(x, b2));
  }
}

TEST_P(SmashProperties, ThetaIsAntiAutomorphism) {
  const Case& c = GetParam();
  auto alg = testing::make(c.family, c.rank, c.kind, c.S);
  auto g = alg->full();
  const auto gpool = testing::letters_of(g, true, false);
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    const Element a = testing::random_element(rng, g, gpool, 3);
    const Element b = testing::random_element(rng, g, gpool, 3);
    EXPECT_EQ(theta(a * b), theta(b) * theta(a));
    EXPECT_EQ(theta(theta(a)), a);
  }
}

TEST_P(SmashProperties, WeightAdditivity) {
  const Case& c = GetParam();
  auto alg = testing::make(c.family, c.rank, c.kind, c.S);
  auto g = alg->full();
  const auto pool = testing::letters_of(g, true, true);
  std::mt19937 rng(29);
  for (int t = 0; t < 30; ++t) {
    Element a = testing::random_element(rng, g, pool, 3, 1);
    Element b = testing::random_element(rng, g, pool, 3, 1);
    const auto wa = a.weight();
    const auto wb = b.weight();
    ASSERT_TRUE(wa && wb);
    const Element p = a * b;
    if (p.is_zero()) continue;
    ASSERT_TRUE(p.weight());
    EXPECT_EQ(*p.weight(), *wa + *wb);
  }
}

TEST_P(SmashProperties, ActionIsRepresentation) {
  const Case& c = GetParam();
  auto alg = testing::make(c.family, c.rank, c.kind, c.S);
  auto g = alg->full();
  const auto bpool = testing::letters_of(g, false, true);
  const auto gpool = testing::letters_of(g, true, false);
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    const Element b = testing::random_element(rng, g, bpool, 2, 2, testing::Coeffs::Constant);
    const Element x = Element::letter(g, gpool[rng() % gpool.size()]);
    const Element y = Element::letter(g, gpool[rng() % gpool.size()]);
    EXPECT_EQ(act(x * y - y * x, b), act(x, act(y, b)) - act(y, act(x, b)));
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, SmashProperties,
                         ::testing::Values(Case{"gl2", Family::A, 1, ModuleKind::Adjoint, std::nullopt},
                                           Case{"gl3", Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0}},
                                           Case{"sp4w", Family::C, 2, ModuleKind::Weyl, std::vector<int>{1}},
                                           Case{"sp6w", Family::C, 3, ModuleKind::Weyl, std::vector<int>{1, 2}},
                                           Case{"sp4", Family::C, 2, ModuleKind::Adjoint, std::vector<int>{1}},
                                           Case{"so8", Family::D, 4, ModuleKind::Adjoint, std::vector<int>{0, 2, 3}}),
                         [](const auto& info) { return std::string(info.param.name); });

}  // namespace
}  // namespace redalg
