#include "redalg/stabcut.hpp"

#include <gtest/gtest.h>

#include <random>

#include "redalg/errors.hpp"
#include "test_support.hpp"

namespace redalg {

void PrintTo(const Relation& r, std::ostream* os) { *os << r.to_string(); }

namespace {

using testing::make;

CosetElement gen(const std::shared_ptr<const Context>& ctx, const char* name) { return CosetElement::generator(ctx, name); }

// A random relation over ctx that holds by construction.
Relation random_relation(std::mt19937& rng, const std::shared_ptr<const Context>& ctx, int pairs) {
  std::vector<Relation::Pair> ps;
  for (int j = 0; j < pairs; ++j) {
    ps.emplace_back(testing::random_coset(rng, ctx, 1), testing::random_coset(rng, ctx, 1));
  }
  Relation r(ctx, ps, CosetElement(ctx));
  return Relation(ctx, std::move(ps), r.lhs(), true);
}

TEST(Stabcut, RelationBasics) {
  auto alg = make(Family::A, 1, ModuleKind::Adjoint);
  auto g = alg->full();
  const CosetElement one = CosetElement::scalar(g, 1);
  const CosetElement E = gen(g, "bE[1]");
  Relation r(g, {{E, one}}, E, true);
  EXPECT_TRUE(r.holds());
  const Relation n = r.normalized();
  EXPECT_TRUE(n.rhs().is_zero());
  ASSERT_EQ(n.pairs().size(), 2u);
  EXPECT_EQ(n.pairs()[1].first, -E);
  EXPECT_TRUE(n.holds());
  EXPECT_THROW(Relation(g, {{E, one}}, one, true), InvalidInput);
  auto other = make(Family::A, 1, ModuleKind::Adjoint);
  EXPECT_THROW(Relation(g, {{E, CosetElement::scalar(other->full(), 1)}}, E), ContextError);
}

TEST(Stabcut, EmbedAndProject) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto g = alg->full();
  auto k = alg->levi();
  EXPECT_EQ(embed_i(CosetElement::scalar(k, 1)), CosetElement::scalar(g, 1));
  const CosetElement e1 = gen(k, "bE[1,0]");
  EXPECT_EQ(project_p(embed_i(e1)), e1);
  EXPECT_TRUE(project_p(gen(g, "bE[0,1]")).is_zero());
  EXPECT_THROW(embed_i(gen(g, "bE[1,0]")), ContextError);
  EXPECT_THROW(project_p(e1), ContextError);
}

TEST(Stabcut, DirectSumDecomposition) {
  for (auto alg : {make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0}),
                   make(Family::C, 2, ModuleKind::Weyl, std::vector<int>{1})}) {
    auto g = alg->full();
    std::mt19937 rng(21);
    for (int t = 0; t < 50; ++t) {
      const CosetElement z = testing::random_coset(rng, g, 3, 3);
      const Decomposition d = decompose(z);
      EXPECT_EQ(z, embed_i(project_p(z)) + d.zminus + d.zplus + d.zoverlap) << z.to_string();
    }
  }
}

// Independent hand expansion in DR(sl2), h = h1 - h2, H = bH1 - bH2:
//   E <> F = EF - H^2/h + 2/(h(h+1)) FE,  F <> E = FE,  H <> H = H^2 - 4/(h+2) FE,
// and EF = FE + H in B, hence xi0 = -1/h and xi2 = h(h+3)/((h+1)(h+2)).
TEST(Stabcut, Sl2WeightZeroRelation) {
  auto alg = make(Family::A, 1, ModuleKind::Adjoint);
  auto g = alg->full();
  const CosetElement E = gen(g, "bE[1]");
  const CosetElement F = gen(g, "bF[1]");
  const CosetElement H = gen(g, "bH[1]") - gen(g, "bH[2]");
  const std::vector<CosetElement> ansatz{H, diamond(F, E), diamond(H, H), CosetElement::scalar(g, 1)};
  const CoefficientSolution s = solve_coefficients(diamond(E, F), ansatz);
  ASSERT_EQ(s.outcome, SolveOutcome::Unique);
  EXPECT_EQ(s.coefficients[0], RationalFn(1));
  EXPECT_EQ(s.coefficients[1], RationalFn::parse("(h1-h2)*(h1-h2+3)/((h1-h2+1)*(h1-h2+2))"));
  EXPECT_EQ(s.coefficients[2], RationalFn::parse("-1/(h1-h2)"));
  EXPECT_TRUE(s.coefficients[3].is_zero());
  EXPECT_EQ(combine(s.coefficients, ansatz), diamond(E, F));
}

TEST(Stabcut, SolveCoefficientsOutcomes) {
  auto alg = make(Family::A, 1, ModuleKind::Adjoint);
  auto g = alg->full();
  const CosetElement E = gen(g, "bE[1]");
  const CosetElement F = gen(g, "bF[1]");
  const CosetElement one = CosetElement::scalar(g, 1);
  CoefficientSolution s = solve_coefficients(E, {E, F, one});
  ASSERT_EQ(s.outcome, SolveOutcome::Unique);
  EXPECT_EQ(s.coefficients, (std::vector<RationalFn>{1, 0, 0}));
  EXPECT_EQ(solve_coefficients(E, {F, one}).outcome, SolveOutcome::NoSolution);
  s = solve_coefficients(E, {E, E.scaled(RationalFn::parse("h1"))});
  ASSERT_EQ(s.outcome, SolveOutcome::Family);
  ASSERT_EQ(s.kernel.size(), 1u);
  EXPECT_EQ(combine(s.coefficients, {E, E.scaled(RationalFn::parse("h1"))}), E);
  EXPECT_TRUE(combine(s.kernel[0], {E, E.scaled(RationalFn::parse("h1"))}).is_zero());
}

TEST(Stabcut, TrivialRelationLiftsWithZeroCorrection) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto k = alg->levi();
  const CosetElement one = CosetElement::scalar(k, 1);
  const Stabilized s = stabilize(Relation(k, {{one, one}}, one, true));
  EXPECT_TRUE(s.z.is_zero());
  EXPECT_TRUE(s.lifted.holds());
}

// DR(gl2) inside gl3 through S = {alpha1}: the lift of E1 <> F1 picks up
// bF_beta bE_beta corrections for the roots beta of r_+.
TEST(Stabcut, Gl2RelationLiftsToGl3) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto k = alg->levi();
  const CosetElement E = gen(k, "bE[1,0]");
  const CosetElement F = gen(k, "bF[1,0]");
  const CosetElement H = gen(k, "bH[1]") - gen(k, "bH[2]");
  const std::vector<CosetElement> ansatz{H, diamond(F, E), diamond(H, H)};
  const CoefficientSolution s = solve_coefficients(diamond(E, F), ansatz);
  ASSERT_EQ(s.outcome, SolveOutcome::Unique);
  Relation rel(k, {{E, F}, {-F.scaled(s.coefficients[1]), E}, {-H.scaled(s.coefficients[2]), H}}, H.scaled(s.coefficients[0]),
               true);
  const Stabilized st = stabilize(rel);
  ASSERT_FALSE(st.z.is_zero());
  std::set<Word> allowed;
  for (const char* root : {"[0,1]", "[1,1]"}) {
    const Word w{static_cast<char>(*alg->find_letter(std::string("bF") + root)),
                 static_cast<char>(*alg->find_letter(std::string("bE") + root))};
    allowed.insert(w);
  }
  for (const auto& [w, q] : st.z.terms()) EXPECT_TRUE(allowed.count(w)) << st.z.to_string();
  EXPECT_TRUE(st.lifted.holds());
  EXPECT_EQ(cut(st.lifted), rel.normalized());
}

TEST(Stabcut, CutRejectsRhsOutsideI) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto g = alg->full();
  const CosetElement E = gen(g, "bE[1,0]");
  EXPECT_THROW(cut(Relation(g, {{E, CosetElement::scalar(g, 1)}}, E)), InvalidInput);
  const CosetElement Eb = gen(g, "bE[0,1]");
  EXPECT_THROW(cut(Relation(g, {}, Eb)), TheoremViolation);
  // A pair outside the image of i.
  const CosetElement Fb = gen(g, "bF[0,1]");
  const CosetElement u = diamond(Fb, Eb);
  EXPECT_THROW(cut(Relation(g, {{Fb, Eb}}, u)), InvalidInput);
}

TEST(Stabcut, StabilizationResidualLiesInJ) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto k = alg->levi();
  std::mt19937 rng(8);
  for (int t = 0; t < 6; ++t) {
    const Relation rel = random_relation(rng, k, 2);
    const Stabilized s = stabilize(rel);
    const Decomposition d = decompose(s.z);
    EXPECT_TRUE(d.z0.is_zero() && d.zminus.is_zero() && d.zplus.is_zero());
    EXPECT_EQ(cut(s.lifted), rel.normalized());
  }
}

TEST(Stabcut, ReindexIntoLargerAlgebra) {
  auto sp4 = make(Family::C, 2, ModuleKind::Weyl);
  auto sp6 = make(Family::C, 3, ModuleKind::Weyl, std::vector<int>{1, 2});
  const IndexEmbedding emb{{1, 2}};
  auto k = sp6->levi();
  EXPECT_EQ(reindex(CosetElement::scalar(sp4->full(), 1), k, emb), CosetElement::scalar(k, 1));
  const CosetElement x2 = gen(sp4->full(), "x[2]").scaled(RationalFn::parse("h1/(h2+1)"));
  EXPECT_EQ(reindex(x2, k, emb), gen(k, "x[3]").scaled(RationalFn::parse("h2/(h3+1)")));
  auto gl2 = make(Family::A, 1, ModuleKind::Adjoint);
  auto gl3 = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{1});
  EXPECT_EQ(reindex(gen(gl2->full(), "bE[1]"), gl3->levi(), IndexEmbedding{{1, 2}}), gen(gl3->levi(), "bE[0,1]"));
  EXPECT_THROW(reindex(gen(sp4->full(), "d[1]"), k, IndexEmbedding{{0, 1}}), ContextError);
}

TEST(Stabcut, Sp4RelationLiftsToSp6) {
  auto sp4 = make(Family::C, 2, ModuleKind::Weyl);
  auto a = sp4->full();
  const CosetElement x1 = gen(a, "x[1]");
  const CosetElement d1 = gen(a, "d[1]");
  const std::vector<CosetElement> ansatz{CosetElement::scalar(a, 1), diamond(d1, x1), diamond(gen(a, "d[2]"), gen(a, "x[2]"))};
  const CoefficientSolution s = solve_coefficients(diamond(x1, d1), ansatz);
  ASSERT_EQ(s.outcome, SolveOutcome::Unique);
  for (const auto& c : s.coefficients) EXPECT_FALSE(c.is_zero());

  auto sp6 = make(Family::C, 3, ModuleKind::Weyl, std::vector<int>{1, 2});
  const IndexEmbedding emb{{1, 2}};
  auto k = sp6->levi();
  auto g = sp6->full();
  // Every ansatz product goes into the pairs so that it lifts as a product.
  Relation rel(a,
               {{x1, d1},
                {-d1.scaled(s.coefficients[1]), x1},
                {-gen(a, "d[2]").scaled(s.coefficients[2]), gen(a, "x[2]")}},
               CosetElement::scalar(a, s.coefficients[0]), true);
  const Relation rel_k = reindex(rel, k, emb);
  ASSERT_TRUE(rel_k.holds());
  const Stabilized st = stabilize(rel_k);
  const CosetElement new_term = diamond(gen(g, "d[1]"), gen(g, "x[1]"));
  const CoefficientSolution zc = solve_coefficients(st.z, {new_term});
  ASSERT_EQ(zc.outcome, SolveOutcome::Unique);
  EXPECT_FALSE(zc.coefficients[0].is_zero());

  const std::vector<CosetElement> lifted{CosetElement::scalar(g, 1), new_term, diamond(gen(g, "d[2]"), gen(g, "x[2]")),
                                         diamond(gen(g, "d[3]"), gen(g, "x[3]"))};
  const CoefficientSolution direct = solve_coefficients(diamond(gen(g, "x[2]"), gen(g, "d[2]")), lifted);
  ASSERT_EQ(direct.outcome, SolveOutcome::Unique);
  for (const auto& c : direct.coefficients) EXPECT_FALSE(c.is_zero());
  EXPECT_EQ(direct.coefficients[0], reindex(s.coefficients[0], emb));
  EXPECT_EQ(direct.coefficients[2], reindex(s.coefficients[1], emb));
  EXPECT_EQ(direct.coefficients[3], reindex(s.coefficients[2], emb));
  EXPECT_EQ(direct.coefficients[1], zc.coefficients[0]);
  EXPECT_EQ(cut(st.lifted), rel_k.normalized());
}

TEST(Stabcut, CentralityExamples) {
  auto alg = make(Family::A, 1, ModuleKind::Adjoint);
  auto g = alg->full();
  const auto gens = coset_generators(g);
  EXPECT_EQ(gens.size(), 4u);
  EXPECT_TRUE(centrality_check(CosetElement::scalar(g, 1), gens).pass);
  const CentralityReport r = centrality_check(gen(g, "bE[1]"), {gen(g, "bF[1]")});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.failures.size(), 1u);
  const auto central = central_elements(g, 2);
  bool quadratic = false;
  for (const auto& z : central) {
    EXPECT_TRUE(centrality_check(z, gens).pass) << z.to_string();
    for (const auto& [w, q] : z.terms()) quadratic |= w.size() == 2;
  }
  EXPECT_TRUE(quadratic);
}

TEST(Stabcut, ProjectionOfCentralElements) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto g = alg->full();
  auto k = alg->levi();
  const auto central = central_elements(g, 2);
  ASSERT_GE(central.size(), 4u);
  const auto k_gens = coset_generators(k);
  for (const auto& z : central) {
    const CentralityReport r = centrality_check(project_p(z), k_gens);
    EXPECT_TRUE(r.pass) << z.to_string();
  }
  for (std::size_t i = 0; i < central.size(); ++i) {
    for (std::size_t j = i; j < central.size(); ++j) {
      EXPECT_EQ(project_p(diamond(central[i], central[j])), diamond(project_p(central[i]), project_p(central[j])));
    }
  }
}

}  // namespace
}  // namespace redalg
