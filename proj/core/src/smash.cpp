#include "redalg/smash.hpp"

#include <algorithm>
#include <sstream>

#include "redalg/errors.hpp"

namespace redalg {

IntWeight negated(const IntWeight& w) {
  IntWeight r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = -w[i];
  return r;
}

IntWeight operator+(const IntWeight& a, const IntWeight& b) {
  IntWeight r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

IntWeight operator-(const IntWeight& a, const IntWeight& b) {
  IntWeight r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

std::span<const long> weight_span(const IntWeight& w, int dim) { return std::span<const long>(w.data(), dim); }

// ---------------------------------------------------------------------------
// Algebra construction

std::shared_ptr<const Algebra> Algebra::create(const RootSystem& rs, ModuleKind kind, std::optional<std::vector<int>> S,
                                               std::vector<std::string> var_names) {
  std::shared_ptr<Algebra> a(new Algebra());
  a->build(rs, kind, std::move(S), std::move(var_names));
  return a;
}

void Algebra::build(const RootSystem& rs, ModuleKind kind, std::optional<std::vector<int>> S,
                    std::vector<std::string> names) {
  rs_ = rs;
  lie_ = LieAlgebra(rs_);
  has_parabolic_ = S.has_value();
  std::vector<int> subset;
  if (S) {
    subset = *S;
  } else {
    for (int i = 0; i < rs_.rank(); ++i) subset.push_back(i);
  }
  pd_ = parabolic(rs_, subset);
  if (names.empty()) {
    for (int i = 0; i < rs_.dim(); ++i) names.push_back(default_var_name(i));
  }
  if (static_cast<int>(names.size()) != rs_.dim()) throw ConfigError("variable_names must list one name per Cartan variable");
  var_names_ = std::move(names);

  const auto& pos = rs_.positive_roots();
  e_order_.resize(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) e_order_[i] = static_cast<int>(i);
  std::stable_sort(e_order_.begin(), e_order_.end(), [&](int a, int b) {
    const int la = pd_.positive_in_levi[a] ? 0 : 1;
    const int lb = pd_.positive_in_levi[b] ? 0 : 1;
    if (la != lb) return la < lb;
    if (pos[a].height() != pos[b].height()) return pos[a].height() < pos[b].height();
    return pos[a].simple_coords > pos[b].simple_coords;
  });

  module_ = kind == ModuleKind::Adjoint ? ModuleAlgebra::adjoint(rs_, lie_, pd_, e_order_)
                                        : ModuleAlgebra::weyl(rs_, lie_, pd_);

  auto to_iw = [](const std::vector<long>& w) {
    IntWeight r{};
    for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[i];
    return r;
  };
  e_letter_.assign(pos.size(), -1);
  f_letter_.assign(pos.size(), -1);
  letter_of_lie_.assign(lie_.basis_size(), -1);
  for (auto it = e_order_.rbegin(); it != e_order_.rend(); ++it) {
    Letter l;
    l.kind = LetterKind::F;
    l.root = *it;
    l.lie = lie_.f_index(*it);
    l.weight = to_iw(lie_.weight(l.lie));
    l.levi = pd_.positive_in_levi[*it];
    l.name = root_letter_name("F", pos[*it].simple_coords);
    f_letter_[*it] = static_cast<int>(letters_.size());
    letter_of_lie_[l.lie] = f_letter_[*it];
    letters_.push_back(std::move(l));
  }
  b_offset_ = static_cast<int>(letters_.size());
  for (int g = 0; g < module_.size(); ++g) {
    const auto& gen = module_.generators()[g];
    Letter l;
    l.kind = LetterKind::B;
    l.gen = g;
    l.weight = gen.weight;
    l.parity = gen.parity;
    l.flag = gen.flag;
    l.levi = gen.flag == 0;
    if (gen.lie >= 0 && !lie_.is_h(gen.lie)) l.root = lie_.root_of(gen.lie);
    l.name = gen.name;
    letters_.push_back(std::move(l));
  }
  for (int p : e_order_) {
    Letter l;
    l.kind = LetterKind::E;
    l.root = p;
    l.lie = lie_.e_index(p);
    l.weight = to_iw(lie_.weight(l.lie));
    l.levi = pd_.positive_in_levi[p];
    l.name = root_letter_name("E", pos[p].simple_coords);
    e_letter_[p] = static_cast<int>(letters_.size());
    letter_of_lie_[l.lie] = e_letter_[p];
    letters_.push_back(std::move(l));
  }
  if (letters_.size() >= 255) throw ResourceError("too many PBW generators");

  // Commutation table for y > x.
  const std::size_t n = letters_.size();
  comm_.assign(n * n, Terms{});
  auto cartan_coeff = [&](const LieVec& v, Terms& out) {
    Polynomial cartan;
    for (const auto& [b, c] : v) {
      if (lie_.is_h(b)) {
        cartan += Polynomial::variable(b - 2 * lie_.num_positive()).scaled(c);
      } else {
        out.emplace_back(Word(1, static_cast<char>(letter_of_lie_[b])), RationalFn(c));
      }
    }
    if (!cartan.is_zero()) out.emplace_back(Word(), RationalFn(cartan));
  };
  auto gens_to_terms = [&](const GenComb& c, long scale, Terms& out) {
    if (c.constant != 0) out.emplace_back(Word(), RationalFn(scale * c.constant));
    for (const auto& [g, v] : c.gens) out.emplace_back(Word(1, static_cast<char>(b_offset_ + g)), RationalFn(scale * v));
  };
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < y; ++x) {
      const Letter& ly = letters_[y];
      const Letter& lx = letters_[x];
      Terms t;
      if (ly.kind != LetterKind::B && lx.kind != LetterKind::B) {
        cartan_coeff(lie_.bracket(ly.lie, lx.lie), t);
      } else if (ly.kind == LetterKind::E && lx.kind == LetterKind::B) {
        gens_to_terms(module_.action(ly.lie, lx.gen), 1, t);
      } else if (ly.kind == LetterKind::B && lx.kind == LetterKind::F) {
        gens_to_terms(module_.action(lx.lie, ly.gen), -1, t);
      } else if (ly.kind == LetterKind::B && lx.kind == LetterKind::B) {
        gens_to_terms(module_.commutator(ly.gen, lx.gen), 1, t);
      } else {
        throw InternalError("letter blocks out of order");
      }
      std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      comm_[y * n + x] = std::move(t);
    }
  }

  full_.algebra_ = this;
  full_.levi_ = false;
  full_.simple_mask_.assign(rs_.rank(), true);
  for (int i = 0; i < rs_.rank(); ++i) full_.simple_.push_back(i);
  for (std::size_t p = 0; p < pos.size(); ++p) full_.roots_.push_back(static_cast<int>(p));
  full_.allowed_.assign(n, true);

  levi_.algebra_ = this;
  levi_.levi_ = true;
  levi_.simple_ = pd_.S;
  levi_.simple_mask_ = pd_.in_S;
  for (std::size_t p = 0; p < pos.size(); ++p) {
    if (pd_.positive_in_levi[p]) levi_.roots_.push_back(static_cast<int>(p));
  }
  levi_.allowed_.resize(n);
  for (std::size_t i = 0; i < n; ++i) levi_.allowed_[i] = letters_[i].levi;
}

int Algebra::letter_of_lie(int b) const { return letter_of_lie_[b]; }

int Algebra::theta_letter(int id) const {
  const Letter& l = letters_[id];
  if (l.kind == LetterKind::E) return f_letter_[l.root];
  if (l.kind == LetterKind::F) return e_letter_[l.root];
  throw ContextError("theta is only defined on U(g)");
}

std::optional<int> Algebra::find_letter(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::shared_ptr<const Context> Algebra::full() const { return std::shared_ptr<const Context>(shared_from_this(), &full_); }

std::shared_ptr<const Context> Algebra::levi() const { return std::shared_ptr<const Context>(shared_from_this(), &levi_); }

std::string Algebra::signature() const {
  std::ostringstream os;
  os << rs_.name() << "|" << (kind() == ModuleKind::Adjoint ? "adjoint" : "weyl") << "|S=";
  for (std::size_t i = 0; i < pd_.S.size(); ++i) os << (i ? "," : "") << pd_.S[i] + 1;
  os << "|";
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i].name;
  return os.str();
}

int Algebra::swap_sign(int a, int b) const {
  return letters_[a].parity == Parity::Odd && letters_[b].parity == Parity::Odd ? -1 : 1;
}

IntWeight Algebra::word_weight(const Word& w) const {
  IntWeight r{};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const IntWeight& lw = letters_[letter_at(w, i)].weight;
    for (int k = 0; k < kMaxVars; ++k) r[k] += lw[k];
  }
  return r;
}

bool Algebra::is_normal(const Word& w) const {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (letter_at(w, i - 1) > letter_at(w, i)) return false;
    if (letter_at(w, i - 1) == letter_at(w, i) && letters_[letter_at(w, i)].parity == Parity::Odd) return false;
  }
  return true;
}

std::size_t Algebra::memo_size() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return rmul_memo_.size() + product_memo_.size();
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

void add_into(std::map<Word, RationalFn>& acc, const Word& w, const RationalFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Terms to_terms(std::map<Word, RationalFn>&& acc) {
  Terms out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc) out.emplace_back(w, std::move(c));
  return out;
}

}  // namespace

const Terms& Algebra::rmul(const Word& u, int x) const {
  Word key = u;
  key.push_back(static_cast<char>(x));
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = rmul_memo_.find(key);
    if (it != rmul_memo_.end()) return it->second;
  }
  Terms t = compute_rmul(u, x);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return rmul_memo_.try_emplace(std::move(key), std::move(t)).first->second;
}

Terms Algebra::compute_rmul(const Word& u, int x) const {
  if (u.empty() || letter_at(u, u.size() - 1) < x) {
    Word w = u;
    w.push_back(static_cast<char>(x));
    return {{w, RationalFn(1)}};
  }
  const int y = letter_at(u, u.size() - 1);
  if (y == x) {
    if (letters_[x].parity == Parity::Odd) throw InternalError("odd generators have no shipped square rule");
    Word w = u;
    w.push_back(static_cast<char>(x));
    return {{w, RationalFn(1)}};
  }
  // u = u' y with y > x:  u' y x = s u' x y + u' [y, x].
  const Word head = u.substr(0, u.size() - 1);
  const int s = swap_sign(y, x);
  std::map<Word, RationalFn> acc;
  const Terms first = rmul(head, x);
  for (const auto& [w, q] : first) {
    for (const auto& [w2, q2] : rmul(w, y)) add_into(acc, w2, s == 1 ? q * q2 : -(q * q2));
  }
  const Terms& comm = commutator(y, x);
  if (!comm.empty()) {
    const IntWeight shift = negated(word_weight(head));
    for (const auto& [v, c] : comm) {
      const RationalFn cs = c.shifted(weight_span(shift, num_vars()));
      for (const auto& [w, q] : word_product(head, v)) add_into(acc, w, cs * q);
    }
  }
  return to_terms(std::move(acc));
}

const Terms& Algebra::word_product(const Word& u, const Word& v) const {
  Word key = u;
  key.push_back('\xff');
  key += v;
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = product_memo_.find(key);
    if (it != product_memo_.end()) return it->second;
  }
  Terms cur{{u, RationalFn(1)}};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int x = letter_at(v, i);
    // Appending to a word that is already in order needs no rewriting.
    if (cur.size() == 1 && cur[0].second.is_one() &&
        (cur[0].first.empty() || letter_at(cur[0].first, cur[0].first.size() - 1) < x)) {
      cur[0].first.push_back(static_cast<char>(x));
      continue;
    }
    std::map<Word, RationalFn> acc;
    for (const auto& [w, q] : cur) {
      for (const auto& [w2, q2] : rmul(w, x)) add_into(acc, w2, q * q2);
    }
    cur = to_terms(std::move(acc));
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return product_memo_.try_emplace(std::move(key), std::move(cur)).first->second;
}

Terms Algebra::normal_form(const std::vector<int>& letters) const {
  Terms cur{{Word(), RationalFn(1)}};
  for (int x : letters) {
    std::map<Word, RationalFn> acc;
    for (const auto& [w, q] : cur) {
      for (const auto& [w2, q2] : rmul(w, x)) add_into(acc, w2, q * q2);
    }
    cur = to_terms(std::move(acc));
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Element

Element Element::scalar(std::shared_ptr<const Context> ctx, const RationalFn& c) {
  Element e(std::move(ctx));
  e.add_term(Word(), c);
  return e;
}

Element Element::monomial(std::shared_ptr<const Context> ctx, const Word& w, const RationalFn& c) {
  const Algebra& alg = ctx->algebra();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (letter_at(w, i) >= alg.num_letters() || !ctx->allows(letter_at(w, i))) {
      throw ContextError("generator is not available in this context");
    }
  }
  if (!alg.is_normal(w)) throw ContextError("monomial is not in PBW order");
  Element e(std::move(ctx));
  e.add_term(w, c);
  return e;
}

Element Element::letter(std::shared_ptr<const Context> ctx, int id) {
  return monomial(std::move(ctx), Word(1, static_cast<char>(id)));
}

const Context& Element::context() const {
  if (!ctx_) throw ContextError("element has no context");
  return *ctx_;
}

RationalFn Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RationalFn() : it->second;
}

void Element::add_term(const Word& w, const RationalFn& c) { add_into(terms_, w, c); }

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

namespace {

void check_same(const std::shared_ptr<const Context>& a, const std::shared_ptr<const Context>& b) {
  if (a && b && a.get() != b.get()) throw ContextError("operands belong to different algebra contexts");
}

}  // namespace

Element& Element::operator+=(const Element& o) {
  check_same(ctx_, o.ctx_);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [w, c] : o.terms_) add_into(terms_, w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same(ctx_, o.ctx_);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [w, c] : o.terms_) add_into(terms_, w, -c);
  return *this;
}

Element Element::scaled(const RationalFn& c) const {
  Element r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [w, q] : terms_) r.terms_.emplace(w, c * q);
  return r;
}

bool operator==(const Element& a, const Element& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.ctx_.get() == b.ctx_.get() && a.terms_ == b.terms_;
}

std::optional<IntWeight> Element::weight() const {
  if (terms_.empty()) return IntWeight{};
  const Algebra& alg = algebra();
  std::optional<IntWeight> w;
  for (const auto& [word, c] : terms_) {
    const IntWeight tw = alg.word_weight(word);
    if (!w) {
      w = tw;
    } else if (*w != tw) {
      return std::nullopt;
    }
  }
  return w;
}

bool Element::is_homogeneous() const { return weight().has_value(); }

bool Element::is_pure_g() const {
  if (terms_.empty()) return true;
  const Algebra& alg = algebra();
  for (const auto& [w, c] : terms_) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (alg.letter(letter_at(w, i)).kind == LetterKind::B) return false;
    }
  }
  return true;
}

bool Element::is_pure_b() const {
  if (terms_.empty()) return true;
  const Algebra& alg = algebra();
  for (const auto& [w, c] : terms_) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (alg.letter(letter_at(w, i)).kind != LetterKind::B) return false;
    }
  }
  return true;
}

Element Element::in_context(std::shared_ptr<const Context> ctx) const {
  if (ctx_ && &ctx_->algebra() != &ctx->algebra()) throw ContextError("contexts belong to different algebras");
  for (const auto& [w, c] : terms_) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!ctx->allows(letter_at(w, i))) throw ContextError("generator is not available in the target context");
    }
  }
  Element r(std::move(ctx));
  r.terms_ = terms_;
  return r;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  const Algebra& alg = algebra();
  const auto& names = alg.var_names();
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string t;
    std::string word;
    for (std::size_t i = 0; i < w.size(); ++i) word += (i ? "*" : "") + alg.letter(letter_at(w, i)).name;
    if (w.empty()) {
      t = c.to_string(names);
    } else if (c.is_one()) {
      t = word;
    } else if ((-c).is_one()) {
      t = "-" + word;
    } else if (c.is_constant() && c.den().is_one()) {
      t = c.to_string(names) + "*" + word;
    } else {
      t = "(" + c.to_string(names) + ")*" + word;
    }
    if (first) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operations

Element multiply(const Element& a, const Element& b) {
  check_same(a.context_ptr(), b.context_ptr());
  const auto& ctx = a.context_ptr() ? a.context_ptr() : b.context_ptr();
  Element out(ctx);
  if (a.is_zero() || b.is_zero()) return out;
  const Algebra& alg = ctx->algebra();
  const int dim = alg.num_vars();
  std::map<Word, RationalFn> acc;
  for (const auto& [wa, qa] : a.terms()) {
    const IntWeight shift = negated(alg.word_weight(wa));
    for (const auto& [wb, qb] : b.terms()) {
      const RationalFn q = qa * qb.shifted(weight_span(shift, dim));
      for (const auto& [w, c] : alg.word_product(wa, wb)) add_into(acc, w, q * c);
    }
  }
  for (auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

Element act_basis(int lie_basis, const Element& b) {
  Element out(b.context_ptr());
  if (b.is_zero()) return out;
  if (!b.is_pure_b()) throw ContextError("the g-action is defined on B only");
  const Algebra& alg = b.algebra();
  const ModuleAlgebra& mod = alg.module();
  const Letter* acting = nullptr;
  const int acting_letter = alg.letter_of_lie(lie_basis);
  if (acting_letter >= 0) acting = &alg.letter(acting_letter);
  std::map<Word, RationalFn> acc;
  for (const auto& [w, q] : b.terms()) {
    int sign = 1;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int lk = letter_at(w, k);
      const Word head = w.substr(0, k);
      const Word tail = w.substr(k + 1);
      for (const auto& [g, v] : mod.action(lie_basis, alg.letter(lk).gen).gens) {
        for (const auto& [w1, q1] : alg.rmul(head, alg.b_letter(g))) {
          for (const auto& [w2, q2] : alg.word_product(w1, tail)) add_into(acc, w2, q * q1 * q2 * RationalFn(sign * v));
        }
      }
      if (acting && acting->parity == Parity::Odd && alg.letter(lk).parity == Parity::Odd) sign = -sign;
    }
  }
  for (auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

Element act(const Element& u, const Element& b) {
  if (!u.is_pure_g()) throw ContextError("act expects an element of U(g)");
  if (!b.is_pure_b()) throw ContextError("act expects an element of B");
  check_same(u.context_ptr(), b.context_ptr());
  Element out(b.context_ptr() ? b.context_ptr() : u.context_ptr());
  if (u.is_zero() || b.is_zero()) return out;
  const Algebra& alg = b.algebra();
  for (const auto& [w, q] : u.terms()) {
    Element cur = b;
    for (std::size_t k = w.size(); k-- > 0;) cur = act_basis(alg.letter(letter_at(w, k)).lie, cur);
    if (q.is_constant()) {
      out += cur.scaled(q);
      continue;
    }
    // Cartan coefficients act through the weight of each term.
    for (const auto& [v, c] : cur.terms()) {
      const IntWeight wt = alg.word_weight(v);
      std::vector<mpq_class> point(alg.num_vars());
      for (int i = 0; i < alg.num_vars(); ++i) point[i] = wt[i];
      Element t(cur.context_ptr());
      t.add_term(v, c * RationalFn(q.evaluate(point)));
      out += t;
    }
  }
  return out;
}

Element theta(const Element& a) {
  if (!a.is_pure_g()) throw ContextError("theta is defined on U(g) only");
  Element out(a.context_ptr());
  if (a.is_zero()) return out;
  const Algebra& alg = a.algebra();
  std::map<Word, RationalFn> acc;
  for (const auto& [w, q] : a.terms()) {
    std::vector<int> image;
    for (std::size_t k = w.size(); k-- > 0;) image.push_back(alg.theta_letter(letter_at(w, k)));
    const RationalFn qs = q.shifted(weight_span(alg.word_weight(w), alg.num_vars()));
    Word direct;
    for (int x : image) direct.push_back(static_cast<char>(x));
    if (alg.is_normal(direct)) {
      add_into(acc, direct, qs);
      continue;
    }
    for (const auto& [v, c] : alg.normal_form(image)) add_into(acc, v, qs * c);
  }
  for (auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

}  // namespace redalg
