// One line per acceptance criterion. Equalities are exact; the only
// tolerance is the runtime limit of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../unit/test_support.hpp"
#include "redalg/errors.hpp"
#include "redalg/stabcut.hpp"

namespace redalg {
namespace {

using testing::make;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

CosetElement gen(const std::shared_ptr<const Context>& ctx, const std::string& name) {
  return CosetElement::generator(ctx, name);
}

Weight w_of(const Algebra& alg, const RootCoords& c) { return alg.root_system().from_simple_coords(c); }

std::string cache_dir = ".";

// Shared between criteria 5, 6, 7 and 9.
std::vector<Relation> corpus;

Outcome projector_sl2() {
  Outcome o;
  auto alg = make(Family::A, 1, ModuleKind::Adjoint);
  auto g = alg->full();
  for (long k = 0; k <= 4; ++k) {
    const Weight lambda = w_of(*alg, {k});
    o.require(oracle_projector(g, lambda).value == projector_term(g, lambda).value,
              "oracle disagrees at k=" + std::to_string(k));
  }
  Word fe;
  fe.push_back(static_cast<char>(*alg->find_letter("F[1]")));
  fe.push_back(static_cast<char>(*alg->find_letter("E[1]")));
  const RationalFn c1 = projector_term(g, w_of(*alg, {1})).value.coefficient(fe);
  o.require(c1 == RationalFn::parse("-1/(h1 - h2 + 2)"), "k=1 coefficient is " + c1.to_string());
  return o;
}

Outcome levi_truncation() {
  Outcome o;
  struct Case {
    const char* name;
    Family f;
    int rank;
    ModuleKind kind;
    std::vector<int> S;
  };
  const Case cases[] = {{"gl3", Family::A, 2, ModuleKind::Adjoint, {0}},
                        {"sp4", Family::C, 2, ModuleKind::Adjoint, {1}},
                        {"sp4 weyl", Family::C, 2, ModuleKind::Weyl, {1}},
                        {"so8", Family::D, 4, ModuleKind::Adjoint, {0, 2, 3}}};
  std::size_t checked = 0;
  for (const Case& c : cases) {
    auto alg = make(c.f, c.rank, c.kind, c.S);
    RootCoords bound(static_cast<std::size_t>(c.rank), 0);
    for (int i : c.S) bound[i] = 3;
    for (const LeviCheckEntry& e : levi_truncation_check(*alg, w_of(*alg, bound), 3)) {
      ++checked;
      o.require(e.pass, std::string(c.name) + ": " + e.detail);
    }
  }
  o.detail = o.pass ? std::to_string(checked) + " Levi weights" : o.detail;
  return o;
}

Outcome associativity() {
  Outcome o;
  auto run = [&](const std::shared_ptr<const Algebra>& alg, int triples, unsigned seed, const char* name) {
    auto g = alg->full();
    std::mt19937 rng(seed);
    for (int t = 0; t < triples; ++t) {
      const CosetElement a = testing::random_coset(rng, g, 2);
      const CosetElement b = testing::random_coset(rng, g, 2);
      const CosetElement c = testing::random_coset(rng, g, 2);
      o.require(diamond(diamond(a, b), c) == diamond(a, diamond(b, c)), std::string(name) + " triple " + std::to_string(t));
    }
  };
  run(make(Family::A, 1, ModuleKind::Adjoint), 50, 101, "DR(gl2)");
  run(make(Family::C, 2, ModuleKind::Weyl), 25, 202, "D(sp4)");
  return o;
}

Outcome sl2_relation() {
  Outcome o;
  auto alg = make(Family::A, 1, ModuleKind::Adjoint);
  auto g = alg->full();
  const CosetElement E = gen(g, "bE[1]");
  const CosetElement F = gen(g, "bF[1]");
  const CosetElement H = gen(g, "bH[1]") - gen(g, "bH[2]");
  const std::vector<CosetElement> ansatz{H, diamond(F, E), diamond(H, H)};
  const CosetElement lhs = diamond(E, F);
  const CoefficientSolution s = solve_coefficients(lhs, ansatz);
  o.require(s.outcome == SolveOutcome::Unique, "solution is not unique");
  if (!o.pass) return o;
  o.require((lhs - combine(s.coefficients, ansatz)).is_zero(), "nonzero residual");
  o.require(!s.coefficients[1].is_zero() && !s.coefficients[2].is_zero(), "xi2 or xi0 vanishes");
  o.detail = "xi2 = " + s.coefficients[1].to_string() + ", xi0 = " + s.coefficients[2].to_string();
  return o;
}

Outcome stabilization_theorem() {
  Outcome o;
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto k = alg->levi();
  std::mt19937 rng(55);
  for (int t = 0; t < 20; ++t) {
    std::vector<Relation::Pair> pairs;
    for (int j = 0; j < 2; ++j) pairs.emplace_back(testing::random_coset(rng, k, 2), testing::random_coset(rng, k, 2));
    const Relation probe(k, pairs, CosetElement(k));
    const Relation rel(k, std::move(pairs), probe.lhs(), true);
    try {
      const Stabilized s = stabilize(rel);
      const Decomposition d = decompose(s.z);
      o.require(d.z0.is_zero(), "z0 != 0 for relation " + std::to_string(t));
      o.require(d.zminus.is_zero() && d.zplus.is_zero(), "z not in J for relation " + std::to_string(t));
      corpus.push_back(rel);
    } catch (const TheoremViolation& e) {
      o.require(false, e.what());
    }
  }
  return o;
}

Outcome sp4_to_sp6() {
  Outcome o;
  auto sp4 = make(Family::C, 2, ModuleKind::Weyl);
  auto a = sp4->full();
  const CosetElement x1 = gen(a, "x[1]");
  const CosetElement d1 = gen(a, "d[1]");
  const CosetElement x2 = gen(a, "x[2]");
  const CosetElement d2 = gen(a, "d[2]");
  const std::vector<CosetElement> ansatz{CosetElement::scalar(a, 1), diamond(d1, x1), diamond(d2, x2)};
  const CoefficientSolution s = solve_coefficients(diamond(x1, d1), ansatz);
  o.require(s.outcome == SolveOutcome::Unique, "(a) D(sp4) solution is not unique");
  if (!o.pass) return o;

  auto sp6 = make(Family::C, 3, ModuleKind::Weyl, std::vector<int>{1, 2});
  const IndexEmbedding emb{{1, 2}};
  auto g = sp6->full();
  const std::vector<CosetElement> lifted{CosetElement::scalar(g, 1), diamond(gen(g, "d[1]"), gen(g, "x[1]")),
                                         diamond(gen(g, "d[2]"), gen(g, "x[2]")), diamond(gen(g, "d[3]"), gen(g, "x[3]"))};
  const CoefficientSolution t = solve_coefficients(diamond(gen(g, "x[2]"), gen(g, "d[2]")), lifted);
  o.require(t.outcome == SolveOutcome::Unique, "(b) D(sp6) solution is not unique");
  if (!o.pass) return o;
  for (const auto& c : t.coefficients) o.require(!c.is_zero(), "(b) support is smaller than expected");
  o.require(t.coefficients[0] == reindex(s.coefficients[0], emb) && t.coefficients[2] == reindex(s.coefficients[1], emb) &&
                t.coefficients[3] == reindex(s.coefficients[2], emb),
            "(b) shared coefficients changed");

  // The same statement through stabilize: the correction is one new term.
  const Relation rel(a, {{x1, d1}, {-d1.scaled(s.coefficients[1]), x1}, {-d2.scaled(s.coefficients[2]), x2}},
                     CosetElement::scalar(a, s.coefficients[0]), true);
  const Relation rel_k = reindex(rel, sp6->levi(), emb);
  const Stabilized st = stabilize(rel_k);
  const CoefficientSolution z = solve_coefficients(st.z, {lifted[1]});
  o.require(z.outcome == SolveOutcome::Unique && z.coefficients[0] == t.coefficients[1],
            "stabilization correction is not the single new term");
  corpus.push_back(rel_k);
  return o;
}

Outcome so8_relation() {
  Outcome o;
  auto alg = make(Family::D, 4, ModuleKind::Adjoint, std::vector<int>{0, 1});
  auto g = alg->full();
  Projector::of(g)->attach_cache(cache_dir + "/so8_projector.cache");
  const RootSystem& rs = alg->root_system();
  const CosetElement E1 = gen(g, "bE[1,0,0,0]");
  const CosetElement F1 = gen(g, "bF[1,0,0,0]");
  const CosetElement H1 = gen(g, "bH[1]") - gen(g, "bH[2]");
  std::vector<CosetElement> ansatz{H1, diamond(F1, E1), diamond(H1, H1)};
  std::vector<RootCoords> betas;
  for (const Root& r : rs.positive_roots()) {
    if (r.simple_coords[1] > 0) betas.push_back(r.simple_coords);
  }
  for (const RootCoords& b : betas) ansatz.push_back(diamond(gen(g, root_letter_name("bF", b)), gen(g, root_letter_name("bE", b))));
  const CoefficientSolution s = solve_coefficients(diamond(E1, F1), ansatz);
  o.require(betas.size() == 9, "expected 9 roots beta");
  o.require(s.outcome == SolveOutcome::Unique, "solution is not unique");
  if (!o.pass) return o;
  o.require(s.coefficients[0] == RationalFn(1), "H1 coefficient is not 1");

  // alpha2 <-> alpha3 acts on h as h4 -> -h4.
  const std::vector<RationalFn> flip{RationalFn::variable(0), RationalFn::variable(1), RationalFn::variable(2),
                                     -RationalFn::variable(3)};
  std::set<RootCoords> orbits;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    RootCoords swapped = betas[i];
    std::swap(swapped[2], swapped[3]);
    std::size_t j = 0;
    while (betas[j] != swapped) ++j;
    o.require(s.coefficients[3 + j] == s.coefficients[3 + i].substituted(flip),
              "xi not symmetric for " + root_letter_name("", betas[i]));
    orbits.insert(std::min(betas[i], swapped));
  }
  o.require(s.coefficients[1] == s.coefficients[1].substituted(flip) && s.coefficients[2] == s.coefficients[2].substituted(flip),
            "xi2 or xi0 not symmetric");

  // Cut to gl3 + gl1 through S = {alpha1, alpha0}.
  auto k = alg->levi();
  std::vector<Relation::Pair> pairs{{E1, F1},
                                    {-F1.scaled(s.coefficients[1]), E1},
                                    {-H1.scaled(s.coefficients[2]), H1},
                                    {-H1.scaled(s.coefficients[0]), CosetElement::scalar(g, 1)}};
  CosetElement u(g);
  std::set<RootCoords> deleted;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const CosetElement f = gen(g, root_letter_name("bF", betas[i]));
    const CosetElement e = gen(g, root_letter_name("bE", betas[i]));
    if (betas[i][2] == 0 && betas[i][3] == 0) {
      pairs.emplace_back(-f.scaled(s.coefficients[3 + i]), e);
    } else {
      u += ansatz[3 + i].scaled(s.coefficients[3 + i]);
      deleted.insert(betas[i]);
    }
  }
  std::size_t expected_deleted = 0;
  for (const RootCoords& b : betas) expected_deleted += (b[2] > 0 || b[3] > 0);
  o.require(deleted.size() == expected_deleted && expected_deleted == 7, "unexpected set of deleted roots");
  try {
    const Relation cut_rel = cut(Relation(g, std::move(pairs), u));
    o.require(cut_rel.holds(), "cut relation fails in DR(gl3+gl1)");
    corpus.push_back(cut_rel);
  } catch (const Error& e) {
    o.require(false, std::string("cut failed: ") + e.what());
  }
  if (o.pass) {
    o.detail = "unique; " + std::to_string(orbits.size()) + " coefficient orbits under alpha2<->alpha3; cut deletes " +
               std::to_string(deleted.size()) + " of 9 roots";
  }
  return o;
}

Outcome ghost_center() {
  Outcome o;
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto g = alg->full();
  auto k = alg->levi();
  const auto central = central_elements(g, 2);
  std::vector<CosetElement> quadratic;
  for (const auto& z : central) {
    bool deg2 = false;
    for (const auto& [w, q] : z.terms()) deg2 |= w.size() == 2;
    if (deg2) quadratic.push_back(z);
  }
  o.require(!quadratic.empty(), "no degree-2 central element found");
  const auto k_gens = coset_generators(k);
  for (const auto& z : central) {
    o.require(centrality_check(z, coset_generators(g)).pass, "solved element is not central in DR(gl3)");
    const CentralityReport r = centrality_check(project_p(z), k_gens);
    o.require(r.pass, "p(z) not central: " + (r.failures.empty() ? std::string() : r.failures.front()));
  }
  for (std::size_t i = 0; i < central.size(); ++i) {
    for (std::size_t j = 0; j < central.size(); ++j) {
      o.require(project_p(diamond(central[i], central[j])) == diamond(project_p(central[i]), project_p(central[j])),
                "p is not multiplicative");
    }
  }
  if (o.pass) o.detail = std::to_string(central.size()) + " central elements, " + std::to_string(quadratic.size()) + " of degree 2";
  return o;
}

Outcome round_trip() {
  Outcome o;
  auto alg = make(Family::A, 2, ModuleKind::Adjoint, std::vector<int>{0});
  auto k = alg->levi();
  const CosetElement E = gen(k, "bE[1,0]");
  const CosetElement F = gen(k, "bF[1,0]");
  const CosetElement H = gen(k, "bH[1]") - gen(k, "bH[2]");
  const std::vector<CosetElement> ansatz{H, diamond(F, E), diamond(H, H)};
  const CoefficientSolution s = solve_coefficients(diamond(E, F), ansatz);
  corpus.emplace_back(k,
                      std::vector<Relation::Pair>{{E, F}, {-F.scaled(s.coefficients[1]), E}, {-H.scaled(s.coefficients[2]), H}},
                      H.scaled(s.coefficients[0]), true);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    try {
      o.require(cut(stabilize(corpus[i]).lifted) == corpus[i].normalized(), "relation " + std::to_string(i) + " changed");
    } catch (const Error& e) {
      o.require(false, "relation " + std::to_string(i) + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " relations";
  return o;
}

}  // namespace
}  // namespace redalg

int main(int argc, char** argv) {
  using namespace redalg;
  if (argc > 1) cache_dir = argv[1];
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "projector sl2 vs oracle", 1, projector_sl2},
      {2, "Levi truncation gl3, sp4, so8", 120, levi_truncation},
      {3, "diamond associativity DR(gl2), D(sp4)", 300, associativity},
      {4, "DR(sl2) weight-zero relation", 10, sl2_relation},
      {5, "stabilization residual in J, gl2+gl1 in gl3", 300, stabilization_theorem},
      {6, "D(sp4) relation and its lift to D(sp6)", 300, sp4_to_sp6},
      {7, "so8 weight-zero relation, symmetry and cut", 900, so8_relation},
      {8, "ghost center cutting gl3 to gl2+gl1", 300, ghost_center},
      {9, "cut after stabilize is the identity", 60, round_trip},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    all &= o.pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.limit);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << timing << "]";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
