#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "redalg/coset.hpp"

namespace redalg {

/// sum_j x_j <> y_j = rhs in the coset algebra of one context.
class Relation {
 public:
  using Pair = std::pair<CosetElement, CosetElement>;

  Relation() = default;
  /// With `checked`, throws InvalidInput unless the relation holds.
  Relation(std::shared_ptr<const Context> ctx, std::vector<Pair> pairs, CosetElement rhs, bool checked = false);

  const std::shared_ptr<const Context>& context_ptr() const { return ctx_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const CosetElement& rhs() const { return rhs_; }

  /// sum_j x_j <> y_j.
  CosetElement lhs() const;
  CosetElement residual() const { return lhs() - rhs_; }
  bool holds() const { return residual().is_zero(); }
  /// The same relation with rhs moved into the pairs as (-rhs, 1) and
  /// zero pairs dropped.
  Relation normalized() const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.ctx_ == b.ctx_ && a.pairs_ == b.pairs_ && a.rhs_ == b.rhs_;
  }
  std::string to_string() const;

 private:
  std::shared_ptr<const Context> ctx_;
  std::vector<Pair> pairs_;
  CosetElement rhs_;
};

/// i: Z_k -> Z_g. Throws ContextError unless z lives in the Levi context.
CosetElement embed_i(const CosetElement& z);
/// p: Z_g -> Z_k, the B_0 part of z read in the Levi context.
CosetElement project_p(const CosetElement& z);

struct Stabilized {
  /// Over g: the embedded pairs of the normalized k-relation, rhs = z.
  Relation lifted;
  CosetElement z;
};

/// Lifts a relation of Z_k to Z_g. Throws InvalidInput if the relation does
/// not hold in Z_k and TheoremViolation if the correction is not in J.
Stabilized stabilize(const Relation& rel);

/// Deletes the I-component of a g-relation whose pairs all come from Z_k.
/// Returns the pairs read over k with rhs p(u) = 0. Throws InvalidInput if a
/// pair is not embedded or u is not in I, TheoremViolation if u is not in J
/// or the result fails to hold over k.
Relation cut(const Relation& rel);

/// Index embedding between algebras in epsilon coordinates: source index i
/// goes to target index index[i]. Root letters follow their weights, bH[i],
/// x[i] and d[i] follow their index.
struct IndexEmbedding {
  std::vector<int> index;
};

/// Transports z into ctx along the embedding. The map is multiplicative on
/// B, so each monomial is rebuilt as a product in the target.
CosetElement reindex(const CosetElement& z, const std::shared_ptr<const Context>& ctx, const IndexEmbedding& emb);
RationalFn reindex(const RationalFn& q, const IndexEmbedding& emb);
Relation reindex(const Relation& rel, const std::shared_ptr<const Context>& ctx, const IndexEmbedding& emb);

enum class SolveOutcome { Unique, NoSolution, Family };

struct CoefficientSolution {
  SolveOutcome outcome = SolveOutcome::NoSolution;
  /// Particular solution; empty for NoSolution.
  std::vector<RationalFn> coefficients;
  /// Basis of the homogeneous solutions; empty unless Family.
  std::vector<std::vector<RationalFn>> kernel;
};

/// Cartan coefficients c_i with lhs = sum_i c_i ansatz_i.
CoefficientSolution solve_coefficients(const CosetElement& lhs, const std::vector<CosetElement>& ansatz);
CosetElement combine(const std::vector<RationalFn>& coefficients, const std::vector<CosetElement>& ansatz);

enum class CentralityMode { Central, Anticentral };

struct CentralityReport {
  bool pass = true;
  /// One line per generator that fails.
  std::vector<std::string> failures;
};

/// z <> a - sigma a <> z for each generator a.
CentralityReport centrality_check(const CosetElement& z, const std::vector<CosetElement>& generators,
                                  CentralityMode mode = CentralityMode::Central);

/// The B-generators admitted by a context, as coset elements.
std::vector<CosetElement> coset_generators(const std::shared_ptr<const Context>& ctx);

/// Basis of the central elements among Q-combinations of weight-zero
/// B-monomials of degree <= max_degree. Candidates come from evaluation at
/// random points; every returned element is verified exactly.
std::vector<CosetElement> central_elements(const std::shared_ptr<const Context>& ctx, int max_degree = 2,
                                           unsigned seed = 1);

}  // namespace redalg
