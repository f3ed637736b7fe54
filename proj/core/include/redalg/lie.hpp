#pragma once

#include <map>
#include <utility>
#include <vector>

#include "redalg/rootdata.hpp"

namespace redalg {

/// Integer square matrix, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<long> a;

  explicit IntMatrix(int size = 0) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  long& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  long operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  IntMatrix transposed() const;
  bool is_zero() const;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  IntMatrix& add_scaled(const IntMatrix& x, long c);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n == y.n && x.a == y.a; }
};

/// Sparse vector over the g-basis.
using LieVec = std::vector<std::pair<int, long>>;

/// Matrix realisation of g with basis
///   0 .. P-1        e_alpha for the positive roots (RootSystem order)
///   P .. 2P-1       f_alpha = transpose(e_alpha)
///   2P .. 2P+dim-1  h_i (epsilon-coordinate Cartan elements)
/// Brackets are matrix commutators decomposed back onto the basis.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(const RootSystem& rs);

  int num_positive() const { return num_pos_; }
  int dim_cartan() const { return dim_; }
  int basis_size() const { return 2 * num_pos_ + dim_; }
  int e_index(int root) const { return root; }
  int f_index(int root) const { return num_pos_ + root; }
  int h_index(int i) const { return 2 * num_pos_ + i; }
  bool is_e(int b) const { return b < num_pos_; }
  bool is_f(int b) const { return b >= num_pos_ && b < 2 * num_pos_; }
  bool is_h(int b) const { return b >= 2 * num_pos_; }
  int root_of(int b) const { return b < num_pos_ ? b : b - num_pos_; }
  /// theta on basis elements: e_alpha <-> f_alpha, h_i fixed.
  int theta(int b) const;

  const IntMatrix& matrix(int b) const { return mats_[b]; }
  const std::vector<long>& weight(int b) const { return weights_[b]; }
  /// [x, y] for basis elements.
  const LieVec& bracket(int x, int y) const { return table_[static_cast<std::size_t>(x) * basis_size() + y]; }
  /// Decomposes a matrix of the given weight; throws InternalError if it
  /// is not in the span of the basis vectors of that weight.
  LieVec decompose(const IntMatrix& m, const std::vector<long>& weight) const;

  /// Size of the defining representation.
  int matrix_size() const { return msize_; }
  /// Weight of the standard basis vector v_k of the defining representation.
  const std::vector<long>& vector_weight(int k) const { return vec_weights_[k]; }

  /// Jacobi identity on all basis triples; throws InternalError on failure.
  void check_jacobi() const;

 private:
  int num_pos_ = 0;
  int dim_ = 0;
  int msize_ = 0;
  std::vector<IntMatrix> mats_;
  std::vector<std::vector<long>> weights_;
  std::vector<std::vector<long>> vec_weights_;
  std::vector<int> cartan_row_;  // matrix row whose diagonal entry is the h_i coefficient
  std::map<std::vector<long>, int> root_by_weight_;
  std::vector<LieVec> table_;
};

}  // namespace redalg
