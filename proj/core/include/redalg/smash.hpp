#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "redalg/lie.hpp"
#include "redalg/module_algebra.hpp"
#include "redalg/rational_fn.hpp"
#include "redalg/rootdata.hpp"

namespace redalg {

/// A PBW monomial: letter ids in nondecreasing order, one byte each.
using Word = std::string;
using Terms = std::vector<std::pair<Word, RationalFn>>;

inline int letter_at(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

enum class LetterKind : std::uint8_t { F, B, E };

/// A PBW generator of the smash product. Ids run through the f-block, then
/// the B-block, then the e-block.
struct Letter {
  LetterKind kind = LetterKind::B;
  int lie = -1;   // g-basis index (F and E letters)
  int gen = -1;   // module generator (B letters)
  int root = -1;  // positive root index, when the letter is a root vector
  IntWeight weight{};
  Parity parity = Parity::Even;
  int flag = 0;  // B letters: +1 in M_+, -1 in M_-
  bool levi = false;
  std::string name;
};

class Algebra;

/// Either the full algebra A'_g or its Levi part A'_k. Both share letters
/// and rewriting rules; a Levi context only admits letters of k and of B_0.
class Context {
 public:
  const Algebra& algebra() const { return *algebra_; }
  bool is_levi() const { return levi_; }
  /// Indices into the simple roots of the root system.
  const std::vector<int>& simple_indices() const { return simple_; }
  /// Positive-root indices whose root vectors belong to this context.
  const std::vector<int>& positive_roots() const { return roots_; }
  const std::vector<bool>& simple_mask() const { return simple_mask_; }
  bool allows(int letter) const { return allowed_[letter]; }
  std::string name() const { return levi_ ? "k" : "g"; }

 private:
  friend class Algebra;
  const Algebra* algebra_ = nullptr;
  bool levi_ = false;
  std::vector<int> simple_;
  std::vector<bool> simple_mask_;
  std::vector<int> roots_;
  std::vector<bool> allowed_;
};

/// The localized smash product B x U(g) for one root system, module algebra
/// and parabolic subset. Immutable apart from internally locked memo tables.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Without S the algebra has no parabolic structure (S = Pi).
  static std::shared_ptr<const Algebra> create(const RootSystem& rs, ModuleKind kind,
                                               std::optional<std::vector<int>> S = std::nullopt,
                                               std::vector<std::string> var_names = {});

  const RootSystem& root_system() const { return rs_; }
  const LieAlgebra& lie() const { return lie_; }
  const ParabolicData& parabolic_data() const { return pd_; }
  const ModuleAlgebra& module() const { return module_; }
  ModuleKind kind() const { return module_.kind(); }
  bool has_parabolic() const { return has_parabolic_; }
  int num_vars() const { return rs_.dim(); }
  const std::vector<std::string>& var_names() const { return var_names_; }

  int num_letters() const { return static_cast<int>(letters_.size()); }
  const Letter& letter(int id) const { return letters_[id]; }
  int e_letter(int root) const { return e_letter_[root]; }
  int f_letter(int root) const { return f_letter_[root]; }
  int b_letter(int gen) const { return b_offset_ + gen; }
  /// Letter id of a g-basis element that is a root vector, else -1.
  int letter_of_lie(int b) const;
  int theta_letter(int id) const;
  std::optional<int> find_letter(const std::string& name) const;
  /// Positive roots in e-block order (Levi roots first).
  const std::vector<int>& e_order() const { return e_order_; }

  std::shared_ptr<const Context> full() const;
  std::shared_ptr<const Context> levi() const;
  std::shared_ptr<const Context> context(bool levi) const { return levi ? this->levi() : full(); }

  /// Identifies root system, module algebra, parabolic subset and letter
  /// order; used to key persistent caches.
  std::string signature() const;

  IntWeight word_weight(const Word& w) const;
  bool is_normal(const Word& w) const;
  /// Normal form of (normal word u) * (letter x), memoized.
  const Terms& rmul(const Word& u, int x) const;
  /// Normal form of (normal word u) * (normal word v), memoized.
  const Terms& word_product(const Word& u, const Word& v) const;
  /// Normal form of an arbitrary letter sequence.
  Terms normal_form(const std::vector<int>& letters) const;
  /// For letters y > x: y x = (+-) x y + commutator(y, x).
  const Terms& commutator(int y, int x) const { return comm_[static_cast<std::size_t>(y) * letters_.size() + x]; }
  /// Koszul sign for swapping two letters.
  int swap_sign(int a, int b) const;

  std::size_t memo_size() const;

  /// Per-algebra storage for derived data such as projector caches,
  /// created on first use and shared afterwards.
  template <class T, class Make>
  std::shared_ptr<T> attachment(const std::string& key, Make make) const {
    std::lock_guard<std::mutex> lock(attach_mutex_);
    auto& slot = attachments_[key];
    if (!slot) slot = make();
    return std::static_pointer_cast<T>(slot);
  }

 private:
  Algebra() = default;
  void build(const RootSystem& rs, ModuleKind kind, std::optional<std::vector<int>> S, std::vector<std::string> names);
  Terms compute_rmul(const Word& u, int x) const;

  RootSystem rs_;
  LieAlgebra lie_;
  ParabolicData pd_;
  ModuleAlgebra module_;
  bool has_parabolic_ = false;
  std::vector<std::string> var_names_;
  std::vector<Letter> letters_;
  std::vector<int> e_letter_;
  std::vector<int> f_letter_;
  std::vector<int> letter_of_lie_;
  std::vector<int> e_order_;
  int b_offset_ = 0;
  std::vector<Terms> comm_;
  Context full_;
  Context levi_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, Terms> rmul_memo_;
  mutable std::unordered_map<Word, Terms> product_memo_;
  mutable std::mutex attach_mutex_;
  mutable std::map<std::string, std::shared_ptr<void>> attachments_;
};

/// Finite sum of coefficient * PBW monomial, coefficients on the left.
class Element {
 public:
  Element() = default;
  explicit Element(std::shared_ptr<const Context> ctx) : ctx_(std::move(ctx)) {}
  static Element scalar(std::shared_ptr<const Context> ctx, const RationalFn& c);
  /// w must be a normal word over letters the context admits.
  static Element monomial(std::shared_ptr<const Context> ctx, const Word& w, const RationalFn& c = RationalFn(1));
  static Element letter(std::shared_ptr<const Context> ctx, int id);

  const std::shared_ptr<const Context>& context_ptr() const { return ctx_; }
  const Context& context() const;
  const Algebra& algebra() const { return context().algebra(); }
  const std::map<Word, RationalFn>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RationalFn coefficient(const Word& w) const;

  void add_term(const Word& w, const RationalFn& c);
  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  /// Left multiplication by a Cartan coefficient.
  Element scaled(const RationalFn& c) const;
  friend bool operator==(const Element& a, const Element& b);

  std::optional<IntWeight> weight() const;
  bool is_homogeneous() const;
  bool is_pure_g() const;
  bool is_pure_b() const;
  /// Same terms in another context of the same algebra; throws ContextError
  /// if some letter is not admitted there.
  Element in_context(std::shared_ptr<const Context> ctx) const;

  std::string to_string() const;

 private:
  std::shared_ptr<const Context> ctx_;
  std::map<Word, RationalFn> terms_;
};

/// Product in A'_g (or A'_k) in canonical PBW form.
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
/// Action of a g-basis element on a B-element, extended as a derivation.
Element act_basis(int lie_basis, const Element& b);
/// Action of u in U'(g) on b in B.
Element act(const Element& u, const Element& b);
/// Cartan anti-automorphism on U'(g).
Element theta(const Element& a);

/// Negated weight as a shift vector for RationalFn::shifted.
std::span<const long> weight_span(const IntWeight& w, int dim);
IntWeight negated(const IntWeight& w);
IntWeight operator+(const IntWeight& a, const IntWeight& b);
IntWeight operator-(const IntWeight& a, const IntWeight& b);

}  // namespace redalg
