#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "redalg/smash.hpp"

namespace redalg {

inline void PrintTo(const Element& e, std::ostream* os) { *os << e.to_string(); }

}  // namespace redalg

namespace redalg::testing {

inline std::shared_ptr<const Algebra> make(Family f, int rank, ModuleKind kind,
                                           std::optional<std::vector<int>> S = std::nullopt) {
  return Algebra::create(RootSystem::build(f, rank), kind, std::move(S));
}

enum class Coeffs { Constant, Polynomial, Rational };

inline RationalFn random_coeff(std::mt19937& rng, int vars, Coeffs kind = Coeffs::Rational) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> var(0, vars - 1);
  RationalFn c(small(rng));
  if (c.is_zero()) c = RationalFn(1);
  if (kind == Coeffs::Constant) return c;
  if (rng() % 2) c += RationalFn(small(rng)) * RationalFn::variable(var(rng));
  if (kind == Coeffs::Rational && rng() % 3 == 0) {
    RationalFn d = RationalFn::variable(var(rng)) + RationalFn(1 + static_cast<long>(rng() % 4));
    c /= d;
  }
  return c.is_zero() ? RationalFn(1) : c;
}

/// Random element whose terms are normal-ordered products of up to
/// max_degree letters drawn from `pool`.
inline Element random_element(std::mt19937& rng, const std::shared_ptr<const Context>& ctx, const std::vector<int>& pool,
                              int max_degree, int max_terms = 2, Coeffs kind = Coeffs::Rational) {
  const Algebra& alg = ctx->algebra();
  Element out(ctx);
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    const int deg = static_cast<int>(rng() % (max_degree + 1));
    std::vector<int> letters;
    for (int k = 0; k < deg; ++k) letters.push_back(pool[rng() % pool.size()]);
    const RationalFn c = random_coeff(rng, alg.num_vars(), kind);
    for (const auto& [w, q] : alg.normal_form(letters)) out += Element::monomial(ctx, w, c * q);
  }
  return out;
}

inline std::vector<int> letters_of(const std::shared_ptr<const Context>& ctx, bool g, bool b) {
  std::vector<int> out;
  const Algebra& alg = ctx->algebra();
  for (int i = 0; i < alg.num_letters(); ++i) {
    if (!ctx->allows(i)) continue;
    const bool is_b = alg.letter(i).kind == LetterKind::B;
    if ((is_b && b) || (!is_b && g)) out.push_back(i);
  }
  return out;
}

}  // namespace redalg::testing

#include "redalg/coset.hpp"

namespace redalg {

inline void PrintTo(const CosetElement& e, std::ostream* os) { *os << e.to_string(); }

}  // namespace redalg

namespace redalg::testing {

/// Random coset representative: B-monomials of degree <= max_degree.
inline CosetElement random_coset(std::mt19937& rng, const std::shared_ptr<const Context>& ctx, int max_degree,
                                 int max_terms = 2, Coeffs kind = Coeffs::Rational) {
  return CosetElement(random_element(rng, ctx, letters_of(ctx, false, true), max_degree, max_terms, kind));
}

}  // namespace redalg::testing
