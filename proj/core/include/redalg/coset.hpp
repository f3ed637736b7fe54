#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "redalg/projector.hpp"
#include "redalg/smash.hpp"

namespace redalg {

/// Canonical representative of a class in Z = A'/(g_- A' + A' g_+): an
/// element of U'(h) x B, i.e. Cartan coefficients times B-monomials.
class CosetElement {
 public:
  CosetElement() = default;
  explicit CosetElement(std::shared_ptr<const Context> ctx) : e_(std::move(ctx)) {}
  /// Throws ContextError unless x has no g-letters.
  explicit CosetElement(Element x);
  static CosetElement scalar(std::shared_ptr<const Context> ctx, const RationalFn& c);
  static CosetElement monomial(std::shared_ptr<const Context> ctx, const Word& w, const RationalFn& c = RationalFn(1));
  /// The coset of a single B-generator, looked up by name.
  static CosetElement generator(std::shared_ptr<const Context> ctx, const std::string& name);

  /// The representative as an element of A' (the lift).
  const Element& element() const { return e_; }
  const std::shared_ptr<const Context>& context_ptr() const { return e_.context_ptr(); }
  const Context& context() const { return e_.context(); }
  const Algebra& algebra() const { return e_.algebra(); }
  const std::map<Word, RationalFn>& terms() const { return e_.terms(); }
  bool is_zero() const { return e_.is_zero(); }
  std::size_t size() const { return e_.size(); }
  RationalFn coefficient(const Word& w) const { return e_.coefficient(w); }
  std::optional<IntWeight> weight() const { return e_.weight(); }

  CosetElement operator-() const { return CosetElement(-e_); }
  CosetElement& operator+=(const CosetElement& o);
  CosetElement& operator-=(const CosetElement& o);
  friend CosetElement operator+(CosetElement a, const CosetElement& b) { return a += b; }
  friend CosetElement operator-(CosetElement a, const CosetElement& b) { return a -= b; }
  CosetElement scaled(const RationalFn& c) const { return CosetElement(e_.scaled(c)); }
  friend bool operator==(const CosetElement& a, const CosetElement& b) { return a.e_ == b.e_; }

  CosetElement in_context(std::shared_ptr<const Context> ctx) const { return CosetElement(e_.in_context(std::move(ctx))); }
  std::string to_string() const { return e_.to_string(); }

 private:
  Element e_;
};

/// Deletes every term with an f-letter (left block) or an e-letter (right
/// block) from the canonical form.
CosetElement reduce(const Element& a);
inline Element lift(const CosetElement& a) { return a.element(); }

/// The lambda in Q_+ of the context for which P^lambda can contribute to
/// x <> b: differences between weights of the closure of each term of b
/// under the simple raising operators and the weight of that term. Throws
/// ResourceError when a closure exceeds `cap` monomials.
std::vector<RootCoords> lambda_support(const CosetElement& b, std::size_t cap = 10000);

/// a <> b = sum over lambda of reduce(a P^lambda b).
CosetElement diamond(const CosetElement& a, const CosetElement& b);
/// Same product through explicit multiplication in A'; slow, for checks.
CosetElement diamond_naive(const CosetElement& a, const CosetElement& b);

/// Class of a B-monomial under B = B_0 + (B_- + B_+).
BPart classify(const Algebra& alg, const Word& w);

struct Decomposition {
  CosetElement z0;
  CosetElement zminus;
  CosetElement zplus;
  CosetElement zoverlap;
};

/// Splits z by the class of each monomial. Throws ContextError if the
/// algebra was built without a parabolic subset.
Decomposition decompose(const CosetElement& z);

}  // namespace redalg
