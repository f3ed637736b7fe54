#include "redalg/lie.hpp"

#include <map>

#include "redalg/errors.hpp"

namespace redalg {

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool IntMatrix::is_zero() const {
  for (long x : a) {
    if (x != 0) return false;
  }
  return true;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      const long xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r = x;
  return r.add_scaled(y, -1);
}

IntMatrix& IntMatrix::add_scaled(const IntMatrix& x, long c) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * x.a[i];
  return *this;
}

namespace {

std::vector<long> add(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

std::vector<long> neg(const std::vector<long>& a) {
  std::vector<long> r(a);
  for (auto& x : r) x = -x;
  return r;
}

bool all_zero(const std::vector<long>& a) {
  for (long x : a) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

LieAlgebra::LieAlgebra(const RootSystem& rs) : num_pos_(static_cast<int>(rs.positive_roots().size())), dim_(rs.dim()) {
  for (const auto& c : rs.components()) msize_ += c.family == Family::A ? c.dim : 2 * c.dim;
  vec_weights_.assign(msize_, std::vector<long>(dim_, 0));
  cartan_row_.assign(dim_, 0);

  std::vector<IntMatrix> cartan(dim_, IntMatrix(msize_));
  std::map<std::vector<long>, IntMatrix> by_weight;
  int mo = 0;
  for (const auto& c : rs.components()) {
    const int n = c.dim;
    const int o = c.offset;
    const bool sym = c.family != Family::A;
    auto unit = [&](int i, int j, long v, IntMatrix& m) { m(mo + i, mo + j) += v; };
    for (int i = 0; i < n; ++i) {
      vec_weights_[mo + i][o + i] = 1;
      if (sym) vec_weights_[mo + n + i][o + i] = -1;
      unit(i, i, 1, cartan[o + i]);
      if (sym) unit(n + i, n + i, -1, cartan[o + i]);
      cartan_row_[o + i] = mo + i;
    }
    auto wt = [&](int i, int si, int j, int sj) {
      std::vector<long> w(dim_, 0);
      w[o + i] += si;
      if (j >= 0) w[o + j] += sj;
      return w;
    };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        IntMatrix m(msize_);
        unit(i, j, 1, m);
        if (sym) unit(n + j, n + i, -1, m);
        by_weight.emplace(wt(i, 1, j, -1), m);
        if (sym) {
          IntMatrix p(msize_);
          unit(i, n + j, 1, p);
          unit(j, n + i, c.family == Family::C ? 1 : -1, p);
          by_weight.emplace(wt(i, 1, j, 1), p);
        }
      }
      if (c.family == Family::C) {
        IntMatrix m(msize_);
        unit(i, n + i, 1, m);
        by_weight.emplace(wt(i, 2, -1, 0), m);
      }
    }
    mo += sym ? 2 * n : n;
  }

  const int nb = basis_size();
  mats_.resize(nb);
  weights_.resize(nb);
  for (int p = 0; p < num_pos_; ++p) {
    const std::vector<long> w = rs.positive_roots()[p].weight.to_ints();
    auto it = by_weight.find(w);
    if (it == by_weight.end()) throw InternalError("no matrix root vector for a positive root");
    mats_[e_index(p)] = it->second;
    mats_[f_index(p)] = it->second.transposed();
    weights_[e_index(p)] = w;
    weights_[f_index(p)] = neg(w);
    root_by_weight_[w] = p;
  }
  for (int i = 0; i < dim_; ++i) {
    mats_[h_index(i)] = cartan[i];
    weights_[h_index(i)] = std::vector<long>(dim_, 0);
  }

  // Weight consistency of the realisation: [h_i, x] = wt(x)_i x.
  for (int b = 0; b < nb; ++b) {
    for (int i = 0; i < dim_; ++i) {
      IntMatrix comm = cartan[i] * mats_[b] - mats_[b] * cartan[i];
      comm.add_scaled(mats_[b], -weights_[b][i]);
      if (!comm.is_zero()) throw InternalError("root vector has inconsistent weight");
    }
  }

  table_.resize(static_cast<std::size_t>(nb) * nb);
  for (int x = 0; x < nb; ++x) {
    for (int y = 0; y < nb; ++y) {
      const IntMatrix comm = mats_[x] * mats_[y] - mats_[y] * mats_[x];
      table_[static_cast<std::size_t>(x) * nb + y] = decompose(comm, add(weights_[x], weights_[y]));
    }
  }
  for (int p = 0; p < num_pos_; ++p) {
    for (const auto& [b, c] : bracket(e_index(p), f_index(p))) {
      if (!is_h(b)) throw InternalError("[e, f] is not in the Cartan subalgebra");
    }
  }
  check_jacobi();
}

int LieAlgebra::theta(int b) const {
  if (is_e(b)) return f_index(b);
  if (is_f(b)) return b - num_pos_;
  return b;
}

LieVec LieAlgebra::decompose(const IntMatrix& m, const std::vector<long>& weight) const {
  LieVec out;
  if (m.is_zero()) return out;
  if (all_zero(weight)) {
    IntMatrix rest = m;
    for (int i = 0; i < dim_; ++i) {
      const long d = m(cartan_row_[i], cartan_row_[i]);
      if (d != 0) {
        out.emplace_back(h_index(i), d);
        rest.add_scaled(mats_[h_index(i)], -d);
      }
    }
    if (!rest.is_zero()) throw InternalError("weight-zero matrix outside the Cartan subalgebra");
    return out;
  }
  int b = -1;
  if (auto it = root_by_weight_.find(weight); it != root_by_weight_.end()) {
    b = e_index(it->second);
  } else if (auto jt = root_by_weight_.find(neg(weight)); jt != root_by_weight_.end()) {
    b = f_index(jt->second);
  } else {
    throw InternalError("nonzero matrix of non-root weight");
  }
  const IntMatrix& basis = mats_[b];
  std::size_t pivot = 0;
  while (basis.a[pivot] == 0) ++pivot;
  if (m.a[pivot] % basis.a[pivot] != 0) throw InternalError("non-integral structure constant");
  const long c = m.a[pivot] / basis.a[pivot];
  IntMatrix rest = m;
  rest.add_scaled(basis, -c);
  if (!rest.is_zero()) throw InternalError("matrix is not proportional to its root vector");
  out.emplace_back(b, c);
  return out;
}

void LieAlgebra::check_jacobi() const {
  const int nb = basis_size();
  std::vector<long> acc(nb);
  auto add_bracket = [&](int x, const LieVec& v) {
    for (const auto& [b, c] : v) {
      for (const auto& [d, e] : bracket(x, b)) acc[d] += c * e;
    }
  };
  for (int x = 0; x < nb; ++x) {
    for (int y = x + 1; y < nb; ++y) {
      for (int z = y + 1; z < nb; ++z) {
        std::fill(acc.begin(), acc.end(), 0);
        add_bracket(x, bracket(y, z));
        add_bracket(y, bracket(z, x));
        add_bracket(z, bracket(x, y));
        for (long v : acc) {
          if (v != 0) throw InternalError("Jacobi identity fails");
        }
      }
    }
  }
}

}  // namespace redalg
