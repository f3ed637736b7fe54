#include "redalg/projector.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "redalg/errors.hpp"
#include "test_support.hpp"

namespace redalg {
namespace {

using testing::make;

Weight w_of(const Algebra& alg, const RootCoords& c) { return alg.root_system().from_simple_coords(c); }

Word word_of(const Algebra& alg, std::initializer_list<const char*> names) {
  Word w;
  for (const char* n : names) w.push_back(static_cast<char>(*alg.find_letter(n)));
  return w;
}

TEST(Projector, Sl2Components) {
  auto alg = make(Family::A, 1, ModuleKind::Adjoint);
  auto g = alg->full();
  const RationalFn h = RationalFn::parse("h1 - h2");
  EXPECT_EQ(projector_term(g, w_of(*alg, {0})).value, Element::scalar(g, 1));
  const ProjectorTerm& p1 = projector_term(g, w_of(*alg, {1}));
  EXPECT_EQ(p1.value.size(), 1u);
  EXPECT_EQ(p1.value.coefficient(word_of(*alg, {"F[1]", "E[1]"})), RationalFn(-1) / (h + RationalFn(2)));
  const ProjectorTerm& p2 = projector_term(g, w_of(*alg, {2}));
  EXPECT_EQ(p2.value.coefficient(word_of(*alg, {"F[1]", "F[1]", "E[1]", "E[1]"})),
            RationalFn(1) / (RationalFn(2) * (h + RationalFn(2)) * (h + RationalFn(3))));
  const Element trunc = projector_truncated(g, w_of(*alg, {1}));
  EXPECT_EQ(trunc, Element::scalar(g, 1) + p1.value);
}

TEST(Projector, RejectsWeightsOutsideQplus) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  EXPECT_THROW(projector_term(alg->full(), w_of(*alg, {-1, 0})), InvalidInput);
  EXPECT_THROW(projector_term(alg->levi(), w_of(*alg, {0, 1})), InvalidInput);
  EXPECT_THROW(projector_truncated(alg->full(), w_of(*alg, {-1, 1})), InvalidInput);
}

TEST(Projector, Sl2OracleAgreement) {
  auto alg = make(Family::A, 1, ModuleKind::Adjoint);
  for (long k = 0; k <= 4; ++k) {
    const Weight lambda = w_of(*alg, {k});
    EXPECT_EQ(oracle_projector(alg->full(), lambda).value, projector_term(alg->full(), lambda).value) << "k=" << k;
  }
}

TEST(Projector, Gl3TopComponentSupport) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint);
  auto g = alg->full();
  const Element trunc = projector_truncated(g, w_of(*alg, {1, 1}));
  const ProjectorTerm& top = projector_term(g, w_of(*alg, {1, 1}));
  auto sorted = [](Word w) {
    std::sort(w.begin(), w.end());
    return w;
  };
  const std::set<Word> e_words{word_of(*alg, {"E[1,1]"}), sorted(word_of(*alg, {"E[1,0]", "E[0,1]"}))};
  const std::set<Word> f_words{word_of(*alg, {"F[1,1]"}), sorted(word_of(*alg, {"F[1,0]", "F[0,1]"}))};
  EXPECT_EQ(std::set<Word>(top.basis.begin(), top.basis.end()), e_words);
  EXPECT_EQ(top.value.size(), 4u);
  for (const auto& [w, q] : top.value.terms()) {
    std::size_t split = 0;
    while (split < w.size() && alg->letter(letter_at(w, split)).kind == LetterKind::F) ++split;
    EXPECT_TRUE(f_words.count(w.substr(0, split)));
    EXPECT_TRUE(e_words.count(w.substr(split)));
  }
  Element sum = Element::scalar(g, 1);
  for (const RootCoords& c : {RootCoords{1, 0}, RootCoords{0, 1}, RootCoords{1, 1}}) sum += projector_term(g, w_of(*alg, c)).value;
  EXPECT_EQ(trunc, sum);
}

TEST(Projector, Gl3OracleAgreementUpToHeight3) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint);
  for (const Weight& lambda : alg->root_system().enumerate_qplus(w_of(*alg, {3, 3}))) {
    const RootCoords c = *alg->root_system().lattice_coords(lambda);
    if (c[0] + c[1] > 3) continue;
    EXPECT_EQ(oracle_projector(alg->full(), lambda).value, projector_term(alg->full(), lambda).value)
        << lambda.to_string();
  }
}

TEST(Projector, Sp4OracleAgreementUpToHeight2) {
  for (ModuleKind kind : {ModuleKind::Adjoint, ModuleKind::Weyl}) {
    auto alg = make(Family::C, 2, kind);
    for (const Weight& lambda : alg->root_system().enumerate_qplus(w_of(*alg, {2, 2}))) {
      const RootCoords c = *alg->root_system().lattice_coords(lambda);
      if (c[0] + c[1] > 2) continue;
      const ProjectorTerm oracle = oracle_projector(alg->full(), lambda);
      EXPECT_EQ(theta(oracle.value), oracle.value);
      EXPECT_EQ(oracle.value, projector_term(alg->full(), lambda).value) << lambda.to_string();
    }
  }
}

struct ProjectorCase {
  const char* name;
  Family family;
  int rank;
  ModuleKind kind;
  std::optional<std::vector<int>> S;
  RootCoords bound;
};

class ProjectorProperties : public ::testing::TestWithParam<ProjectorCase> {};

// e_i P^{<=bound} has no term whose e-part weight is <= bound.
TEST_P(ProjectorProperties, AnnihilationBelowTruncation) {
  const ProjectorCase& pc = GetParam();
  auto alg = make(pc.family, pc.rank, pc.kind, pc.S);
  const RootSystem& rs = alg->root_system();
  for (bool levi : {false, true}) {
    auto ctx = alg->context(levi);
    RootCoords bound = pc.bound;
    for (std::size_t i = 0; i < bound.size(); ++i) {
      if (!ctx->simple_mask()[i]) bound[i] = 0;
    }
    const Weight bw = w_of(*alg, bound);
    const Element p = projector_truncated(ctx, bw);
    for (int i : ctx->simple_indices()) {
      const int root = rs.positive_root_index(rs.simple_roots()[i]);
      const Element r = Element::letter(ctx, alg->e_letter(root)) * p;
      for (const auto& [w, q] : r.terms()) {
        const IntWeight ew = e_part_weight(*alg, w);
        Weight ewt(static_cast<std::size_t>(rs.dim()));
        for (int d = 0; d < rs.dim(); ++d) ewt[d] = ew[d];
        EXPECT_FALSE(rs.leq(ewt, bw)) << "residual term at e-weight " << ewt.to_string();
      }
    }
  }
}

TEST_P(ProjectorProperties, ThetaSymmetricAndWeightZero) {
  const ProjectorCase& pc = GetParam();
  auto alg = make(pc.family, pc.rank, pc.kind, pc.S);
  auto g = alg->full();
  for (const Weight& lambda : alg->root_system().enumerate_qplus(w_of(*alg, pc.bound))) {
    const ProjectorTerm& t = projector_term(g, lambda);
    EXPECT_EQ(theta(t.value), t.value);
    for (const auto& [w, q] : t.value.terms()) {
      EXPECT_EQ(alg->word_weight(w), IntWeight{});
      EXPECT_EQ(e_part_weight(*alg, w), negated(f_part_weight(*alg, w)));
    }
  }
}

TEST_P(ProjectorProperties, LeviTruncation) {
  const ProjectorCase& pc = GetParam();
  auto alg = make(pc.family, pc.rank, pc.kind, pc.S);
  for (const LeviCheckEntry& e : levi_truncation_check(*alg, w_of(*alg, pc.bound))) {
    EXPECT_TRUE(e.pass) << e.detail;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Contexts, ProjectorProperties,
    ::testing::Values(ProjectorCase{"gl2", Family::A, 1, ModuleKind::Adjoint, std::nullopt, {3}},
                      ProjectorCase{"gl3", Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0}, {2, 2}},
                      ProjectorCase{"sp4adj", Family::C, 2, ModuleKind::Adjoint, std::vector<int>{1}, {2, 1}},
                      ProjectorCase{"sp4weyl", Family::C, 2, ModuleKind::Weyl, std::vector<int>{1}, {1, 2}},
                      ProjectorCase{"so8", Family::D, 4, ModuleKind::Adjoint, std::vector<int>{0, 2, 3}, {1, 1, 1, 0}}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(Projector, LeviTruncationGl3Alpha1) {
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto report = levi_truncation_check(*alg, w_of(*alg, {1, 0}));
  ASSERT_EQ(report.size(), 2u);
  for (const auto& e : report) EXPECT_TRUE(e.pass) << e.detail;
}

TEST(Projector, DiskCacheRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "redalg_projector_cache_test.txt";
  std::filesystem::remove(path);
  Element computed;
  {
    auto alg = make(Family::A, 2, ModuleKind::Adjoint);
    auto proj = Projector::of(alg->full());
    proj->attach_cache(path.string());
    computed = proj->term(RootCoords{2, 1}).value;
  }
  auto alg = make(Family::A, 2, ModuleKind::Adjoint);
  auto proj = Projector::of(alg->full());
  proj->attach_cache(path.string());
  EXPECT_GE(proj->size(), 5u);
  EXPECT_EQ(proj->term(RootCoords{2, 1}).value.to_string(), computed.to_string());
  // A different algebra ignores foreign entries.
  auto other = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto po = Projector::of(other->full());
  po->attach_cache(path.string());
  EXPECT_EQ(po->size(), 0u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace redalg
