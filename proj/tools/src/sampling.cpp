#include "redalg/cli/sampling.hpp"

namespace redalg::cli {

RationalFn sample_coefficient(std::mt19937& rng, int vars) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> var(0, vars - 1);
  RationalFn c(small(rng));
  if (c.is_zero()) c = RationalFn(1);
  if (rng() % 2) c += RationalFn(small(rng)) * RationalFn::variable(var(rng));
  if (rng() % 3 == 0) c /= RationalFn::variable(var(rng)) + RationalFn(1 + static_cast<long>(rng() % 4));
  return c.is_zero() ? RationalFn(1) : c;
}

Element sample_element(std::mt19937& rng, const std::shared_ptr<const Context>& ctx, int max_degree, int max_terms,
                       bool with_g) {
  const Algebra& alg = ctx->algebra();
  std::vector<int> pool;
  for (int i = 0; i < alg.num_letters(); ++i) {
    if (ctx->allows(i) && (with_g || alg.letter(i).kind == LetterKind::B)) pool.push_back(i);
  }
  Element out(ctx);
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    const int deg = pool.empty() ? 0 : static_cast<int>(rng() % (max_degree + 1));
    std::vector<int> letters;
    for (int k = 0; k < deg; ++k) letters.push_back(pool[rng() % pool.size()]);
    const RationalFn c = sample_coefficient(rng, alg.num_vars());
    for (const auto& [w, q] : alg.normal_form(letters)) out += Element::monomial(ctx, w, c * q);
  }
  return out;
}

}  // namespace redalg::cli
