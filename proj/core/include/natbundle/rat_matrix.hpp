#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "natbundle/rational.hpp"

namespace natbundle {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatVector apply(const RatVector& v) const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Sparse row: (column, nonzero value) pairs with strictly increasing columns.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Row-sparse matrix used for large, mostly-empty constraint systems.
struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
};

SparseMatrix to_sparse(const RatMatrix& m);

/// Exact rank over Q.
std::size_t rank(const RatMatrix& m);
std::size_t rank(const SparseMatrix& m);

/// Basis of the right kernel; its length is cols - rank.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Rank modulo the prime 2^61 - 1, or nothing when a denominator vanishes
/// mod p. Never exceeds the rank over Q.
std::optional<std::size_t> rank_mod_p(const SparseMatrix& m);

}  // namespace natbundle
