#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "redalg/rational_fn.hpp"

namespace redalg {

inline bool field_is_zero(const mpq_class& x) { return x == 0; }
inline bool field_is_zero(const RationalFn& x) { return x.is_zero(); }
inline unsigned field_size(const mpq_class& x) {
  return static_cast<unsigned>(mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2));
}
inline unsigned field_size(const RationalFn& x) { return x.total_degree() * 64 + static_cast<unsigned>(x.num().size() + x.den().size()); }

/// Solution of A x = b over a field: a particular solution plus a basis of
/// the kernel of A. `consistent` is false when no solution exists.
template <class F>
struct LinearSolution {
  bool consistent = false;
  std::vector<F> particular;
  std::vector<std::vector<F>> kernel;
};

/// Reduced row echelon form of the augmented system [A | B_1 ... B_m]
/// computed once for several right-hand sides. Pivots are chosen with the
/// smallest field_size among the candidates of a column.
template <class F>
class EchelonSolver {
 public:
  EchelonSolver(std::vector<std::vector<F>> a, std::vector<std::vector<F>> rhs, std::size_t cols)
      : rows_(a.size()), cols_(cols), nrhs_(rhs.size()), a_(std::move(a)) {
    for (std::size_t r = 0; r < rows_; ++r) {
      a_[r].reserve(cols_ + nrhs_);
      for (std::size_t k = 0; k < nrhs_; ++k) a_[r].push_back(rhs[k][r]);
    }
    reduce();
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

  LinearSolution<F> solution(std::size_t k) const {
    LinearSolution<F> out;
    for (std::size_t r = pivots_.size(); r < rows_; ++r) {
      if (!field_is_zero(a_[r][cols_ + k])) return out;
    }
    out.consistent = true;
    out.particular.assign(cols_, F(0));
    for (std::size_t i = 0; i < pivots_.size(); ++i) out.particular[pivots_[i]] = a_[i][cols_ + k];
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, F(0));
      v[free] = F(1);
      for (std::size_t i = 0; i < pivots_.size(); ++i) {
        if (!field_is_zero(a_[i][free])) v[pivots_[i]] = -a_[i][free];
      }
      out.kernel.push_back(std::move(v));
    }
    return out;
  }

 private:
  void reduce() {
    std::size_t row = 0;
    const std::size_t width = cols_ + nrhs_;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t best = rows_;
      unsigned best_size = 0;
      for (std::size_t r = row; r < rows_; ++r) {
        if (field_is_zero(a_[r][col])) continue;
        const unsigned s = field_size(a_[r][col]);
        if (best == rows_ || s < best_size) {
          best = r;
          best_size = s;
        }
      }
      if (best == rows_) continue;
      std::swap(a_[best], a_[row]);
      const F inv = F(1) / a_[row][col];
      for (std::size_t k = col; k < width; ++k) {
        if (!field_is_zero(a_[row][k])) a_[row][k] = a_[row][k] * inv;
      }
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || field_is_zero(a_[r][col])) continue;
        const F f = a_[r][col];
        for (std::size_t k = col; k < width; ++k) {
          if (!field_is_zero(a_[row][k])) a_[r][k] = a_[r][k] - f * a_[row][k];
        }
      }
      pivots_.push_back(col);
      ++row;
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t nrhs_;
  std::vector<std::vector<F>> a_;
  std::vector<std::size_t> pivots_;
};

template <class F>
LinearSolution<F> solve_linear(std::vector<std::vector<F>> a, std::vector<F> b, std::size_t cols) {
  EchelonSolver<F> solver(std::move(a), {std::move(b)}, cols);
  return solver.solution(0);
}

/// Basis of the right kernel of A.
template <class F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  EchelonSolver<F> solver(std::move(a), {std::vector<F>(rows, F(0))}, cols);
  return solver.solution(0).kernel;
}

}  // namespace redalg
