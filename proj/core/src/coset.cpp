#include "redalg/coset.hpp"

#include <deque>
#include <mutex>
#include <set>
#include <unordered_map>

#include "redalg/errors.hpp"

namespace redalg {

namespace {

bool is_b_word(const Algebra& alg, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (alg.letter(letter_at(w, i)).kind != LetterKind::B) return false;
  }
  return true;
}

// Memo tables shared by all diamond products of one context.
struct DiamondCache {
  std::mutex mutex;
  std::unordered_map<Word, Terms> products;
  std::unordered_map<Word, std::vector<RootCoords>> supports;
};

std::shared_ptr<DiamondCache> cache_of(const Context& ctx) {
  return ctx.algebra().attachment<DiamondCache>("diamond:" + ctx.name(), [] { return std::make_shared<DiamondCache>(); });
}

std::vector<RootCoords> monomial_support(const std::shared_ptr<const Context>& ctx, const Word& start, std::size_t cap) {
  auto cache = cache_of(*ctx);
  {
    std::lock_guard<std::mutex> lock(cache->mutex);
    auto it = cache->supports.find(start);
    if (it != cache->supports.end()) return it->second;
  }
  const Algebra& alg = ctx->algebra();
  const RootSystem& rs = alg.root_system();
  std::vector<int> raising;
  for (int i : ctx->simple_indices()) raising.push_back(alg.letter(alg.e_letter(rs.positive_root_index(rs.simple_roots()[i]))).lie);
  std::map<Word, RootCoords> seen;
  std::deque<Word> queue;
  seen.emplace(start, RootCoords(rs.rank(), 0));
  queue.push_back(start);
  while (!queue.empty()) {
    const Word w = queue.front();
    queue.pop_front();
    const RootCoords here = seen.at(w);
    for (std::size_t k = 0; k < raising.size(); ++k) {
      const Element image = act_basis(raising[k], Element::monomial(ctx, w));
      for (const auto& [v, c] : image.terms()) {
        if (seen.count(v)) continue;
        RootCoords next = here;
        next[ctx->simple_indices()[k]] += 1;
        seen.emplace(v, std::move(next));
        if (seen.size() > cap) throw ResourceError("closure under raising operators exceeds " + std::to_string(cap) + " monomials");
        queue.push_back(v);
      }
    }
  }
  std::set<RootCoords> lambdas;
  for (const auto& [w, c] : seen) lambdas.insert(c);
  std::vector<RootCoords> out(lambdas.begin(), lambdas.end());
  std::lock_guard<std::mutex> lock(cache->mutex);
  cache->supports.emplace(start, out);
  return out;
}

// reduce(w_a P w_b) for B-monomials:
//   sum over lambda, e, e' of zeta_{e,e'}(h - wt w_a) [S(theta e').w_a] [e.w_b].
const Terms& monomial_diamond(const std::shared_ptr<const Context>& ctx, const Word& wa, const Word& wb) {
  auto cache = cache_of(*ctx);
  Word key = wa;
  key.push_back('\xff');
  key += wb;
  {
    std::lock_guard<std::mutex> lock(cache->mutex);
    auto it = cache->products.find(key);
    if (it != cache->products.end()) return it->second;
  }
  const Algebra& alg = ctx->algebra();
  const int dim = alg.num_vars();
  const IntWeight shift = negated(alg.word_weight(wa));
  auto proj = Projector::of(ctx);
  const Element a = Element::monomial(ctx, wa);
  const Element b = Element::monomial(ctx, wb);
  Element acc(ctx);
  for (const RootCoords& lambda : monomial_support(ctx, wb, 10000)) {
    const ProjectorTerm& t = proj->term(lambda);
    const std::size_t n = t.basis.size();
    std::vector<Element> x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      y[k] = act(Element::monomial(ctx, t.basis[k]), b);
      // S(theta(e)) acts on w_a: apply the letters of theta(e) from the left
      // end of the word, each with a sign.
      Element cur = a;
      const Word& e = t.basis[k];
      for (std::size_t i = e.size(); i-- > 0 && !cur.is_zero();) {
        cur = -act_basis(alg.letter(alg.theta_letter(letter_at(e, i))).lie, cur);
      }
      x[k] = std::move(cur);
    }
    for (std::size_t e = 0; e < n; ++e) {
      if (y[e].is_zero()) continue;
      for (std::size_t e2 = 0; e2 < n; ++e2) {
        if (x[e2].is_zero() || t.zeta[e][e2].is_zero()) continue;
        acc += (x[e2] * y[e]).scaled(t.zeta[e][e2].shifted(weight_span(shift, dim)));
      }
    }
  }
  Terms out(acc.terms().begin(), acc.terms().end());
  std::lock_guard<std::mutex> lock(cache->mutex);
  return cache->products.try_emplace(std::move(key), std::move(out)).first->second;
}

void check_context(const CosetElement& a, const CosetElement& b) {
  if (a.context_ptr() && b.context_ptr() && a.context_ptr() != b.context_ptr()) {
    throw ContextError("coset elements belong to different contexts");
  }
}

}  // namespace

CosetElement::CosetElement(Element x) : e_(std::move(x)) {
  if (!e_.is_pure_b()) throw ContextError("coset representatives have no g-letters: " + e_.to_string());
}

CosetElement CosetElement::scalar(std::shared_ptr<const Context> ctx, const RationalFn& c) {
  return CosetElement(Element::scalar(std::move(ctx), c));
}

CosetElement CosetElement::monomial(std::shared_ptr<const Context> ctx, const Word& w, const RationalFn& c) {
  return CosetElement(Element::monomial(std::move(ctx), w, c));
}

CosetElement CosetElement::generator(std::shared_ptr<const Context> ctx, const std::string& name) {
  const auto id = ctx->algebra().find_letter(name);
  if (!id || ctx->algebra().letter(*id).kind != LetterKind::B) throw ContextError("unknown module generator " + name);
  return CosetElement(Element::letter(std::move(ctx), *id));
}

CosetElement& CosetElement::operator+=(const CosetElement& o) {
  e_ += o.e_;
  return *this;
}

CosetElement& CosetElement::operator-=(const CosetElement& o) {
  e_ -= o.e_;
  return *this;
}

CosetElement reduce(const Element& a) {
  Element out(a.context_ptr());
  if (a.is_zero()) return CosetElement(out);
  const Algebra& alg = a.algebra();
  for (const auto& [w, q] : a.terms()) {
    if (is_b_word(alg, w)) out.add_term(w, q);
  }
  return CosetElement(std::move(out));
}

std::vector<RootCoords> lambda_support(const CosetElement& b, std::size_t cap) {
  std::set<RootCoords> out;
  for (const auto& [w, q] : b.terms()) {
    for (const RootCoords& c : monomial_support(b.context_ptr(), w, cap)) out.insert(c);
  }
  return {out.begin(), out.end()};
}

CosetElement diamond(const CosetElement& a, const CosetElement& b) {
  check_context(a, b);
  const auto& ctx = a.context_ptr() ? a.context_ptr() : b.context_ptr();
  Element acc(ctx);
  if (a.is_zero() || b.is_zero()) return CosetElement(acc);
  const Algebra& alg = ctx->algebra();
  const int dim = alg.num_vars();
  for (const auto& [wa, qa] : a.terms()) {
    const IntWeight shift = negated(alg.word_weight(wa));
    for (const auto& [wb, qb] : b.terms()) {
      const RationalFn coef = qa * qb.shifted(weight_span(shift, dim));
      for (const auto& [w, c] : monomial_diamond(ctx, wa, wb)) acc.add_term(w, coef * c);
    }
  }
  return CosetElement(std::move(acc));
}

CosetElement diamond_naive(const CosetElement& a, const CosetElement& b) {
  check_context(a, b);
  const auto& ctx = a.context_ptr() ? a.context_ptr() : b.context_ptr();
  CosetElement out(ctx);
  if (a.is_zero() || b.is_zero()) return out;
  auto proj = Projector::of(ctx);
  for (const RootCoords& lambda : lambda_support(b)) {
    out += reduce(a.element() * proj->term(lambda).value * b.element());
  }
  return out;
}

BPart classify(const Algebra& alg, const Word& w) {
  if (w.empty()) return BPart::Zero;
  const bool minus = alg.letter(letter_at(w, 0)).flag < 0;
  const bool plus = alg.letter(letter_at(w, w.size() - 1)).flag > 0;
  if (minus && plus) return BPart::Overlap;
  if (minus) return BPart::Minus;
  if (plus) return BPart::Plus;
  return BPart::Zero;
}

Decomposition decompose(const CosetElement& z) {
  const auto& ctx = z.context_ptr();
  Decomposition d{CosetElement(ctx), CosetElement(ctx), CosetElement(ctx), CosetElement(ctx)};
  if (!ctx) return d;
  const Algebra& alg = ctx->algebra();
  if (!alg.has_parabolic()) throw ContextError("decompose needs an algebra with a parabolic subset");
  for (const auto& [w, q] : z.terms()) {
    const CosetElement t = CosetElement::monomial(ctx, w, q);
    switch (classify(alg, w)) {
      case BPart::Zero: d.z0 += t; break;
      case BPart::Minus: d.zminus += t; break;
      case BPart::Plus: d.zplus += t; break;
      case BPart::Overlap: d.zoverlap += t; break;
    }
  }
  return d;
}

}  // namespace redalg
