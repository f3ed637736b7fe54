#include "redalg/stabcut.hpp"

#include <random>
#include <set>
#include <sstream>

#include "redalg/errors.hpp"
#include "redalg/linsolve.hpp"

namespace redalg {

namespace {

void require_context(const CosetElement& z, const std::shared_ptr<const Context>& ctx) {
  if (z.context_ptr() && z.context_ptr() != ctx) throw ContextError("element belongs to another context: " + z.to_string());
}

std::string describe(const Decomposition& d) {
  std::ostringstream os;
  if (!d.z0.is_zero()) os << " z0 = " << d.z0.to_string() << ";";
  if (!d.zminus.is_zero()) os << " z- = " << d.zminus.to_string() << ";";
  if (!d.zplus.is_zero()) os << " z+ = " << d.zplus.to_string() << ";";
  return os.str();
}

Parity parity_of(const CosetElement& z) {
  if (z.is_zero()) return Parity::Even;
  const Word& w = z.terms().begin()->first;
  bool odd = false;
  for (std::size_t i = 0; i < w.size(); ++i) odd ^= z.algebra().letter(letter_at(w, i)).parity == Parity::Odd;
  return odd ? Parity::Odd : Parity::Even;
}

std::string prefix_of(const std::string& name) { return name.substr(0, name.find('[')); }

int map_letter(const Algebra& src, const Algebra& tgt, int id, const IndexEmbedding& emb) {
  const Letter& l = src.letter(id);
  if (l.kind != LetterKind::B) throw ContextError("only B-letters can be reindexed: " + l.name);
  const std::string prefix = prefix_of(l.name);
  const std::string inner = l.name.substr(prefix.size() + 1, l.name.size() - prefix.size() - 2);
  if (inner.find(',') == std::string::npos && (prefix == "bH" || prefix == "x" || prefix == "d")) {
    const int i = std::stoi(inner) - 1;
    if (i < 0 || i >= static_cast<int>(emb.index.size())) throw ContextError("index of " + l.name + " has no image");
    const std::string name = prefix + "[" + std::to_string(emb.index[i] + 1) + "]";
    const auto found = tgt.find_letter(name);
    if (!found) throw ContextError("target algebra has no generator " + name);
    return *found;
  }
  IntWeight w{};
  for (std::size_t i = 0; i < emb.index.size(); ++i) {
    if (l.weight[i] == 0) continue;
    w[emb.index[i]] = l.weight[i];
  }
  for (int t = 0; t < tgt.num_letters(); ++t) {
    const Letter& c = tgt.letter(t);
    if (c.kind == LetterKind::B && c.weight == w && prefix_of(c.name) == prefix) return t;
  }
  throw ContextError("no image for generator " + l.name);
}

// Nondecreasing letter words of weight zero over the B-letters of ctx.
void weight_zero_words(const Context& ctx, const std::vector<int>& letters, std::size_t from, int left, Word& cur,
                       IntWeight& wt, std::vector<Word>& out) {
  if (wt == IntWeight{}) out.push_back(cur);
  if (left == 0) return;
  for (std::size_t k = from; k < letters.size(); ++k) {
    const Letter& l = ctx.algebra().letter(letters[k]);
    for (int d = 0; d < kMaxVars; ++d) wt[d] += l.weight[d];
    cur.push_back(static_cast<char>(letters[k]));
    weight_zero_words(ctx, letters, k, left - 1, cur, wt, out);
    cur.pop_back();
    for (int d = 0; d < kMaxVars; ++d) wt[d] -= l.weight[d];
  }
}

}  // namespace

Relation::Relation(std::shared_ptr<const Context> ctx, std::vector<Pair> pairs, CosetElement rhs, bool checked)
    : ctx_(std::move(ctx)), pairs_(std::move(pairs)), rhs_(std::move(rhs)) {
  if (!ctx_) throw ContextError("relation needs a context");
  for (const auto& [x, y] : pairs_) {
    require_context(x, ctx_);
    require_context(y, ctx_);
  }
  require_context(rhs_, ctx_);
  if (checked && !holds()) throw InvalidInput("relation does not hold: residual " + residual().to_string());
}

CosetElement Relation::lhs() const {
  CosetElement acc(ctx_);
  for (const auto& [x, y] : pairs_) acc += diamond(x, y);
  return acc;
}

Relation Relation::normalized() const {
  std::vector<Pair> out;
  for (const auto& p : pairs_) {
    if (!p.first.is_zero() && !p.second.is_zero()) out.push_back(p);
  }
  if (!rhs_.is_zero()) out.emplace_back(-rhs_, CosetElement::scalar(ctx_, 1));
  return Relation(ctx_, std::move(out), CosetElement(ctx_));
}

std::string Relation::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < pairs_.size(); ++j) {
    if (j) os << " + ";
    os << "(" << pairs_[j].first.to_string() << ") <> (" << pairs_[j].second.to_string() << ")";
  }
  if (pairs_.empty()) os << "0";
  os << " = " << rhs_.to_string();
  return os.str();
}

CosetElement embed_i(const CosetElement& z) {
  if (!z.context_ptr()) return z;
  if (!z.context().is_levi()) throw ContextError("embed_i expects an element of Z_k");
  return z.in_context(z.algebra().full());
}

CosetElement project_p(const CosetElement& z) {
  if (!z.context_ptr()) return z;
  if (z.context().is_levi()) throw ContextError("project_p expects an element of Z_g");
  return decompose(z).z0.in_context(z.algebra().levi());
}

Stabilized stabilize(const Relation& rel) {
  const auto& k = rel.context_ptr();
  if (!k->is_levi()) throw ContextError("stabilize expects a relation over k");
  if (!rel.holds()) throw InvalidInput("relation does not hold over k: " + rel.to_string());
  const auto g = k->algebra().full();
  std::vector<Relation::Pair> pairs;
  CosetElement z(g);
  const Relation n = rel.normalized();
  for (const auto& [x, y] : n.pairs()) {
    pairs.emplace_back(embed_i(x), embed_i(y));
    z += diamond(pairs.back().first, pairs.back().second);
  }
  const Decomposition d = decompose(z);
  if (!d.z0.is_zero() || !d.zminus.is_zero() || !d.zplus.is_zero()) {
    throw TheoremViolation("stabilization residual is not in J:" + describe(d));
  }
  return {Relation(g, std::move(pairs), z), z};
}

Relation cut(const Relation& rel) {
  const auto& g = rel.context_ptr();
  if (g->is_levi()) throw ContextError("cut expects a relation over g");
  const Decomposition d = decompose(rel.rhs());
  if (!d.z0.is_zero()) throw InvalidInput("rhs is not in I:" + describe(d));
  if (!d.zminus.is_zero() || !d.zplus.is_zero()) throw TheoremViolation("rhs lies in I but not in J:" + describe(d));
  if (!rel.holds()) throw InvalidInput("relation does not hold over g: " + rel.to_string());
  const auto k = g->algebra().levi();
  std::vector<Relation::Pair> pairs;
  for (const auto& [x, y] : rel.pairs()) {
    try {
      pairs.emplace_back(x.in_context(k), y.in_context(k));
    } catch (const ContextError&) {
      throw InvalidInput("pair is not in the image of i: (" + x.to_string() + ", " + y.to_string() + ")");
    }
  }
  Relation out(k, std::move(pairs), CosetElement(k));
  if (!out.holds()) throw TheoremViolation("cut relation fails over k: residual " + out.residual().to_string());
  return out;
}

RationalFn reindex(const RationalFn& q, const IndexEmbedding& emb) { return q.renamed(emb.index); }

CosetElement reindex(const CosetElement& z, const std::shared_ptr<const Context>& ctx, const IndexEmbedding& emb) {
  Element acc(ctx);
  for (const auto& [w, q] : z.terms()) {
    Element t = Element::scalar(ctx, reindex(q, emb));
    for (std::size_t i = 0; i < w.size(); ++i) {
      t = t * Element::letter(ctx, map_letter(z.algebra(), ctx->algebra(), letter_at(w, i), emb));
    }
    acc += t;
  }
  return CosetElement(std::move(acc));
}

Relation reindex(const Relation& rel, const std::shared_ptr<const Context>& ctx, const IndexEmbedding& emb) {
  std::vector<Relation::Pair> pairs;
  for (const auto& [x, y] : rel.pairs()) pairs.emplace_back(reindex(x, ctx, emb), reindex(y, ctx, emb));
  return Relation(ctx, std::move(pairs), reindex(rel.rhs(), ctx, emb));
}

CoefficientSolution solve_coefficients(const CosetElement& lhs, const std::vector<CosetElement>& ansatz) {
  std::shared_ptr<const Context> ctx = lhs.context_ptr();
  for (const auto& a : ansatz) {
    if (!ctx) ctx = a.context_ptr();
    require_context(a, ctx);
  }
  std::set<Word> words;
  for (const auto& [w, q] : lhs.terms()) words.insert(w);
  for (const auto& a : ansatz) {
    for (const auto& [w, q] : a.terms()) words.insert(w);
  }
  std::vector<std::vector<RationalFn>> m;
  std::vector<RationalFn> b;
  for (const Word& w : words) {
    std::vector<RationalFn> row;
    row.reserve(ansatz.size());
    for (const auto& a : ansatz) row.push_back(a.coefficient(w));
    m.push_back(std::move(row));
    b.push_back(lhs.coefficient(w));
  }
  LinearSolution<RationalFn> s = solve_linear(std::move(m), std::move(b), ansatz.size());
  CoefficientSolution out;
  if (!s.consistent) return out;
  out.coefficients = std::move(s.particular);
  out.kernel = std::move(s.kernel);
  out.outcome = out.kernel.empty() ? SolveOutcome::Unique : SolveOutcome::Family;
  return out;
}

CosetElement combine(const std::vector<RationalFn>& coefficients, const std::vector<CosetElement>& ansatz) {
  if (coefficients.size() != ansatz.size()) throw InvalidInput("coefficient count does not match the ansatz");
  CosetElement acc;
  for (std::size_t i = 0; i < ansatz.size(); ++i) {
    if (!acc.context_ptr()) acc = CosetElement(ansatz[i].context_ptr());
    acc += ansatz[i].scaled(coefficients[i]);
  }
  return acc;
}

CentralityReport centrality_check(const CosetElement& z, const std::vector<CosetElement>& generators,
                                  CentralityMode mode) {
  CentralityReport report;
  const bool z_odd = parity_of(z) == Parity::Odd;
  for (const auto& a : generators) {
    const bool a_odd = parity_of(a) == Parity::Odd;
    const bool negative = mode == CentralityMode::Central ? (a_odd && z_odd) : (a_odd && !z_odd);
    const CosetElement za = diamond(z, a);
    const CosetElement az = diamond(a, z);
    const CosetElement r = negative ? za + az : za - az;
    if (!r.is_zero()) {
      report.pass = false;
      report.failures.push_back(a.to_string() + ": " + r.to_string());
    }
  }
  return report;
}

std::vector<CosetElement> coset_generators(const std::shared_ptr<const Context>& ctx) {
  std::vector<CosetElement> out;
  const Algebra& alg = ctx->algebra();
  for (int id = 0; id < alg.num_letters(); ++id) {
    if (alg.letter(id).kind == LetterKind::B && ctx->allows(id)) {
      out.push_back(CosetElement::monomial(ctx, Word(1, static_cast<char>(id))));
    }
  }
  return out;
}

std::vector<CosetElement> central_elements(const std::shared_ptr<const Context>& ctx, int max_degree, unsigned seed) {
  const Algebra& alg = ctx->algebra();
  std::vector<int> letters;
  for (int id = 0; id < alg.num_letters(); ++id) {
    if (alg.letter(id).kind == LetterKind::B && ctx->allows(id)) letters.push_back(id);
  }
  std::vector<Word> words;
  Word cur;
  IntWeight wt{};
  weight_zero_words(*ctx, letters, 0, max_degree, cur, wt, words);
  const std::vector<CosetElement> gens = coset_generators(ctx);

  // commutators[a][w] = w <> a - a <> w
  std::vector<std::vector<CosetElement>> comm(gens.size());
  std::vector<std::set<Word>> support(gens.size());
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (const Word& w : words) {
      const CosetElement m = CosetElement::monomial(ctx, w);
      comm[a].push_back(diamond(m, gens[a]) - diamond(gens[a], m));
      for (const auto& [u, q] : comm[a].back().terms()) support[a].insert(u);
    }
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coord(-997, 997);
  std::vector<std::vector<mpq_class>> rows;
  auto add_point = [&] {
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<mpq_class> point(static_cast<std::size_t>(alg.num_vars()));
      for (auto& x : point) x = mpq_class(coord(rng), 1 + (rng() % 7));
      try {
        std::vector<std::vector<mpq_class>> fresh;
        for (std::size_t a = 0; a < gens.size(); ++a) {
          for (const Word& u : support[a]) {
            std::vector<mpq_class> row;
            for (const auto& c : comm[a]) row.push_back(c.coefficient(u).evaluate(point));
            fresh.push_back(std::move(row));
          }
        }
        rows.insert(rows.end(), fresh.begin(), fresh.end());
        return;
      } catch (const ArithmeticError&) {
      }
    }
    throw InternalError("no evaluation point avoids the poles");
  };
  add_point();
  add_point();
  for (int round = 0; round < 16; ++round) {
    const auto kernel = kernel_basis(rows, words.size());
    std::vector<CosetElement> out;
    bool exact = true;
    for (const auto& v : kernel) {
      for (std::size_t a = 0; a < gens.size() && exact; ++a) {
        CosetElement r(ctx);
        for (std::size_t i = 0; i < words.size(); ++i) {
          if (v[i] != 0) r += comm[a][i].scaled(RationalFn(v[i]));
        }
        exact = r.is_zero();
      }
      if (!exact) break;
      CosetElement z(ctx);
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (v[i] != 0) z += CosetElement::monomial(ctx, words[i], RationalFn(v[i]));
      }
      out.push_back(std::move(z));
    }
    if (exact) return out;
    add_point();
  }
  throw InternalError("central element candidates failed exact verification");
}

}  // namespace redalg
