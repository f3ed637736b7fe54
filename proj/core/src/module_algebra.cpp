#include "redalg/module_algebra.hpp"

#include <algorithm>
#include <map>

#include "redalg/errors.hpp"
#include "redalg/linsolve.hpp"

namespace redalg {

std::string root_letter_name(const std::string& prefix, const std::vector<long>& simple_coords) {
  std::string s = prefix + "[";
  for (std::size_t i = 0; i < simple_coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(simple_coords[i]);
  }
  return s + "]";
}

namespace {

IntWeight to_int_weight(const std::vector<long>& w) {
  IntWeight out{};
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i];
  return out;
}

// Sum of two combinations scaled.
void accumulate(std::map<int, long>& acc, long& constant, const GenComb& c, long scale) {
  constant += scale * c.constant;
  for (const auto& [g, v] : c.gens) acc[g] += scale * v;
}

GenComb from_map(const std::map<int, long>& acc, long constant) {
  GenComb out;
  out.constant = constant;
  for (const auto& [g, v] : acc) {
    if (v != 0) out.gens.emplace_back(g, v);
  }
  return out;
}

}  // namespace

int ModuleAlgebra::find(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

ModuleAlgebra ModuleAlgebra::adjoint(const RootSystem& rs, const LieAlgebra& lie, const ParabolicData& pd,
                                     const std::vector<int>& e_order) {
  ModuleAlgebra m;
  m.kind_ = ModuleKind::Adjoint;
  std::vector<int> gen_of_lie(lie.basis_size(), -1);
  auto push = [&](std::string name, int b, int flag) {
    Generator g;
    g.name = std::move(name);
    g.weight = to_int_weight(lie.weight(b));
    g.lie = b;
    g.flag = flag;
    gen_of_lie[b] = static_cast<int>(m.gens_.size());
    m.gens_.push_back(std::move(g));
  };
  for (auto it = e_order.rbegin(); it != e_order.rend(); ++it) {
    const int p = *it;
    push(root_letter_name("bF", rs.positive_roots()[p].simple_coords), lie.f_index(p), pd.positive_in_levi[p] ? 0 : -1);
  }
  for (int i = 0; i < lie.dim_cartan(); ++i) push("bH[" + std::to_string(i + 1) + "]", lie.h_index(i), 0);
  for (int p : e_order) {
    push(root_letter_name("bE", rs.positive_roots()[p].simple_coords), lie.e_index(p), pd.positive_in_levi[p] ? 0 : 1);
  }
  const std::size_t n = m.gens_.size();
  auto to_gens = [&](const LieVec& v) {
    GenComb c;
    for (const auto& [b, coef] : v) c.gens.emplace_back(gen_of_lie[b], coef);
    std::sort(c.gens.begin(), c.gens.end());
    return c;
  };
  m.comm_.resize(n * n);
  m.act_.resize(static_cast<std::size_t>(lie.basis_size()) * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) m.comm_[y * n + x] = to_gens(lie.bracket(m.gens_[y].lie, m.gens_[x].lie));
  }
  for (int b = 0; b < lie.basis_size(); ++b) {
    for (std::size_t g = 0; g < n; ++g) m.act_[b * n + g] = to_gens(lie.bracket(b, m.gens_[g].lie));
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (m.gens_[g].flag > 0) m.m_plus_.push_back(static_cast<int>(g));
    if (m.gens_[g].flag < 0) m.m_minus_.push_back(static_cast<int>(g));
  }
  m.phi_.resize(lie.basis_size());
  m.validate(lie);
  return m;
}

ModuleAlgebra ModuleAlgebra::weyl(const RootSystem& rs, const LieAlgebra& lie, const ParabolicData& pd) {
  if (rs.components().size() != 1 || rs.components()[0].family != Family::C) {
    throw ConfigError("the Weyl module algebra requires a single type C root system");
  }
  const int n = rs.dim();
  const bool full = std::all_of(pd.in_S.begin(), pd.in_S.end(), [](bool b) { return b; });
  bool split = n >= 2 && !pd.in_S[0];
  for (int i = 1; i < rs.rank(); ++i) split = split && pd.in_S[i];
  if (!full && !split) throw ConfigError("the Weyl module algebra supports S = Pi or S = Pi minus the first simple root");

  ModuleAlgebra m;
  m.kind_ = ModuleKind::Weyl;
  auto push = [&](bool is_x, int i, int flag) {
    Generator g;
    g.name = std::string(is_x ? "x" : "d") + "[" + std::to_string(i + 1) + "]";
    g.weight[i] = is_x ? 1 : -1;
    g.slot = is_x ? i : n + i;
    g.flag = flag;
    m.gens_.push_back(std::move(g));
  };
  if (full) {
    for (int i = 0; i < n; ++i) push(true, i, 0);
    for (int i = 0; i < n; ++i) push(false, i, 0);
  } else {
    push(false, 0, -1);
    for (int i = 1; i < n; ++i) push(true, i, 0);
    for (int i = 1; i < n; ++i) push(false, i, 0);
    push(true, 0, 1);
  }
  const std::size_t ng = m.gens_.size();
  std::vector<int> gen_of_slot(2 * n);
  for (std::size_t g = 0; g < ng; ++g) gen_of_slot[m.gens_[g].slot] = static_cast<int>(g);

  m.comm_.resize(ng * ng);
  for (std::size_t y = 0; y < ng; ++y) {
    for (std::size_t x = 0; x < ng; ++x) {
      const int sy = m.gens_[y].slot;
      const int sx = m.gens_[x].slot;
      // [d_i, x_i] = 1
      if (sy == sx + n) m.comm_[y * ng + x].constant = 1;
      if (sx == sy + n) m.comm_[y * ng + x].constant = -1;
    }
  }
  m.act_.resize(static_cast<std::size_t>(lie.basis_size()) * ng);
  for (int b = 0; b < lie.basis_size(); ++b) {
    const IntMatrix& mat = lie.matrix(b);
    for (std::size_t g = 0; g < ng; ++g) {
      GenComb c;
      const int col = m.gens_[g].slot;
      for (int row = 0; row < 2 * n; ++row) {
        if (mat(row, col) != 0) c.gens.emplace_back(gen_of_slot[row], mat(row, col));
      }
      std::sort(c.gens.begin(), c.gens.end());
      m.act_[b * ng + g] = std::move(c);
    }
  }
  for (std::size_t g = 0; g < ng; ++g) {
    if (m.gens_[g].flag > 0) m.m_plus_.push_back(static_cast<int>(g));
    if (m.gens_[g].flag < 0) m.m_minus_.push_back(static_cast<int>(g));
  }

  // Quadratic realisation: phi(b) = sum over a <= c of k_ac g_a g_c with
  // [phi(b), v] = b.v for every generator v. For a quadratic monomial,
  // [g_a g_c, v] = [g_a, v] g_c + g_a [g_c, v] and the brackets are scalars.
  auto bracket_const = [&](std::size_t a, std::size_t v) -> long {
    if (a == v) return 0;
    return a > v ? m.comm_[a * ng + v].constant : -m.comm_[v * ng + a].constant;
  };
  std::vector<std::pair<int, int>> monos;
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t c = a; c < ng; ++c) monos.emplace_back(static_cast<int>(a), static_cast<int>(c));
  }
  m.phi_.resize(lie.basis_size());
  for (int b = 0; b < lie.basis_size(); ++b) {
    std::vector<std::vector<mpq_class>> a;
    std::vector<mpq_class> rhs;
    for (std::size_t v = 0; v < ng; ++v) {
      for (std::size_t out = 0; out < ng; ++out) {
        std::vector<mpq_class> row(monos.size(), 0);
        for (std::size_t k = 0; k < monos.size(); ++k) {
          const auto [ga, gc] = monos[k];
          if (static_cast<std::size_t>(gc) == out) row[k] += bracket_const(ga, v);
          if (static_cast<std::size_t>(ga) == out) row[k] += bracket_const(gc, v);
        }
        long target = 0;
        for (const auto& [g, coef] : m.act_[b * ng + v].gens) {
          if (static_cast<std::size_t>(g) == out) target = coef;
        }
        a.push_back(std::move(row));
        rhs.emplace_back(target);
      }
    }
    LinearSolution<mpq_class> sol = solve_linear(std::move(a), std::move(rhs), monos.size());
    if (!sol.consistent) throw InternalError("Weyl action is not realised by a quadratic element");
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (sol.particular[k] != 0) m.phi_[b].emplace_back(sol.particular[k], monos[k].first, monos[k].second);
    }
  }
  m.validate(lie);
  return m;
}

void ModuleAlgebra::validate(const LieAlgebra& lie) const {
  const std::size_t n = gens_.size();
  auto comm_any = [&](std::size_t a, std::size_t b) {
    GenComb c;
    if (a == b) return c;
    if (a > b) return comm_[a * n + b];
    c = comm_[b * n + a];
    c.constant = -c.constant;
    for (auto& [g, v] : c.gens) v = -v;
    return c;
  };
  for (int b = 0; b < lie.basis_size(); ++b) {
    for (std::size_t g = 0; g < n; ++g) {
      for (const auto& [h, v] : action(b, static_cast<int>(g)).gens) {
        for (int i = 0; i < kMaxVars; ++i) {
          const long expect = (i < lie.dim_cartan() ? lie.weight(b)[i] : 0) + gens_[g].weight[i];
          if (gens_[h].weight[i] != expect) throw InternalError("module action is not weight-consistent");
        }
        (void)v;
      }
    }
    // b acts as a derivation compatible with [y, x] = comm(y, x):
    // [b.y, x] + [y, b.x] = b.comm(y, x).
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < y; ++x) {
        std::map<int, long> lhs;
        long lc = 0;
        for (const auto& [g, v] : action(b, static_cast<int>(y)).gens) accumulate(lhs, lc, comm_any(g, x), v);
        for (const auto& [g, v] : action(b, static_cast<int>(x)).gens) accumulate(lhs, lc, comm_any(y, g), v);
        std::map<int, long> rhs;
        long rc = 0;
        for (const auto& [g, v] : commutator(static_cast<int>(y), static_cast<int>(x)).gens) {
          accumulate(rhs, rc, action(b, g), v);
        }
        const GenComb l = from_map(lhs, lc);
        const GenComb r = from_map(rhs, rc);
        if (l.constant != r.constant || l.gens != r.gens) throw InternalError("g does not act by derivations on B");
      }
    }
  }
  // Representation property on generators: [x, y].g = x.(y.g) - y.(x.g).
  for (int x = 0; x < lie.basis_size(); ++x) {
    for (int y = 0; y < lie.basis_size(); ++y) {
      for (std::size_t g = 0; g < n; ++g) {
        std::map<int, long> lhs;
        long c = 0;
        for (const auto& [b, v] : lie.bracket(x, y)) accumulate(lhs, c, action(b, static_cast<int>(g)), v);
        for (const auto& [h, v] : action(y, static_cast<int>(g)).gens) accumulate(lhs, c, action(x, h), -v);
        for (const auto& [h, v] : action(x, static_cast<int>(g)).gens) accumulate(lhs, c, action(y, h), v);
        if (!from_map(lhs, c).is_zero()) throw InternalError("module action is not a representation");
      }
    }
  }
}

}  // namespace redalg
