#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "redalg/smash.hpp"

namespace redalg {

/// Simple-root coordinates of a weight in Q_+.
using RootCoords = std::vector<long>;

/// Weight-lambda component of the extremal projector of a context:
/// value = sum over e, e' in B_lambda of zeta[e][e'] * theta(e') * e.
struct ProjectorTerm {
  RootCoords lambda;
  std::vector<Word> basis;
  std::vector<std::vector<RationalFn>> zeta;
  Element value;
};

/// Memoized projector components for one context. Instances live inside the
/// algebra (see Projector::of) and are safe to use from several threads.
class Projector {
 public:
  explicit Projector(const Context* ctx) : ctx_(ctx) {}
  static std::shared_ptr<Projector> of(const std::shared_ptr<const Context>& ctx);

  const Context& context() const { return *ctx_; }
  /// PBW basis of U(context_+) of the given weight, in letter order.
  std::vector<Word> basis(const RootCoords& lambda) const;
  const ProjectorTerm& term(const RootCoords& lambda);
  const ProjectorTerm& term(const Weight& lambda);
  std::size_t size() const;

  /// Loads matching entries from a cache file and appends every newly
  /// computed term to it. Concurrent writers are serialized with flock.
  void attach_cache(const std::string& path);

 private:
  ProjectorTerm solve(const RootCoords& lambda);
  ProjectorTerm assemble(const RootCoords& lambda, std::vector<Word> basis,
                         std::vector<std::vector<RationalFn>> zeta) const;
  void append_to_cache(const ProjectorTerm& t) const;

  const Context* ctx_;
  mutable std::mutex mutex_;
  std::map<RootCoords, ProjectorTerm> memo_;
  std::string cache_path_;
};

/// Checks lambda against the context (nonnegative, supported on its simple
/// roots) and returns its simple-root coordinates. Throws InvalidInput.
RootCoords qplus_coords(const Context& ctx, const Weight& lambda);

const ProjectorTerm& projector_term(const std::shared_ptr<const Context>& ctx, const Weight& lambda);
/// Sum of the components P^lambda over lambda <= bound within the context.
Element projector_truncated(const std::shared_ptr<const Context>& ctx, const Weight& bound);

/// Independent solve of the same component from g_+ P = 0, P g_- = 0 and
/// theta-symmetry at once, one unknown per pair (e, e'). Not memoized.
ProjectorTerm oracle_projector(const std::shared_ptr<const Context>& ctx, const Weight& lambda);

struct LeviCheckEntry {
  RootCoords lambda;
  bool pass = false;
  std::string detail;
};

/// For lambda in Z_{>=0} S below bound (and of height <= max_height when
/// max_height >= 0): P_g^lambda with all r_+- root vectors deleted must equal
/// P_k^lambda.
std::vector<LeviCheckEntry> levi_truncation_check(const Algebra& alg, const Weight& bound, int max_height = -1);

/// F-part and E-part weights of a PBW word of U(g) x B x U(g) shape.
IntWeight f_part_weight(const Algebra& alg, const Word& w);
IntWeight e_part_weight(const Algebra& alg, const Word& w);

}  // namespace redalg
