#pragma once

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "redalg/lie.hpp"
#include "redalg/polynomial.hpp"
#include "redalg/rootdata.hpp"

namespace redalg {

using IntWeight = std::array<long, kMaxVars>;

enum class ModuleKind { Adjoint, Weyl };

/// Integer combination of module generators plus a constant.
struct GenComb {
  long constant = 0;
  std::vector<std::pair<int, long>> gens;
  bool is_zero() const { return constant == 0 && gens.empty(); }
};

/// Part of B a PBW monomial belongs to under the triangular decomposition.
enum class BPart { Zero, Plus, Minus, Overlap };

/// A g-module algebra B given by generators in PBW order, the commutation
/// rules among them, the g-action on generators, and the flags describing
/// B_+ = B M_+ and B_- = M_- B.
class ModuleAlgebra {
 public:
  struct Generator {
    std::string name;
    IntWeight weight{};
    Parity parity = Parity::Even;
    int flag = 0;  // +1: in M_+, -1: in M_-, 0: in B_0
    int lie = -1;  // adjoint copies: the g-basis element copied
    int slot = -1;  // Weyl: index in the defining representation
  };

  /// B = U(g) with the adjoint action. e_order lists positive-root indices
  /// in the E-block order (Levi roots first); the f-copies use the reverse.
  static ModuleAlgebra adjoint(const RootSystem& rs, const LieAlgebra& lie, const ParabolicData& pd,
                               const std::vector<int>& e_order);
  /// B = W(2n) for sp_2n acting through the defining representation. S must
  /// be all of Pi or Pi without the first simple root.
  static ModuleAlgebra weyl(const RootSystem& rs, const LieAlgebra& lie, const ParabolicData& pd);

  ModuleKind kind() const { return kind_; }
  const std::vector<Generator>& generators() const { return gens_; }
  int size() const { return static_cast<int>(gens_.size()); }
  /// For generators y > x in PBW order: y x = (+-) x y + commutator(y, x).
  const GenComb& commutator(int y, int x) const { return comm_[static_cast<std::size_t>(y) * gens_.size() + x]; }
  /// Action of the g-basis element b on generator g.
  const GenComb& action(int b, int g) const { return act_[static_cast<std::size_t>(b) * gens_.size() + g]; }
  /// Weyl only: the quadratic element phi(b) in B whose commutator realises
  /// the action of the g-basis element b, as (coefficient, gen, gen) terms
  /// with the generators in PBW order.
  const std::vector<std::tuple<mpq_class, int, int>>& realisation(int b) const { return phi_[b]; }
  const std::vector<int>& m_plus() const { return m_plus_; }
  const std::vector<int>& m_minus() const { return m_minus_; }
  int find(const std::string& name) const;

  /// Checks weight consistency of the action tables and that every g-basis
  /// element acts by a derivation compatible with the commutation rules.
  void validate(const LieAlgebra& lie) const;

 private:
  ModuleKind kind_ = ModuleKind::Adjoint;
  std::vector<Generator> gens_;
  std::vector<GenComb> comm_;
  std::vector<GenComb> act_;
  std::vector<std::vector<std::tuple<mpq_class, int, int>>> phi_;
  std::vector<int> m_plus_;
  std::vector<int> m_minus_;
};

/// Name of a root vector letter, e.g. "E[1,1,0]".
std::string root_letter_name(const std::string& prefix, const std::vector<long>& simple_coords);

}  // namespace redalg
