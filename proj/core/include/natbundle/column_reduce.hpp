#pragma once

#include <optional>
#include <vector>

#include "natbundle/laurent.hpp"

namespace natbundle {

/// Column degrees of a column-reduced form of a square polynomial matrix.
///
/// Right multiplication by unimodular matrices over Q[v] brings P to a form
/// whose leading column coefficient matrix is invertible. When det P = c v^k
/// the reduced form factors as H(v^-1) diag(v^d_j) with H invertible over
/// Q[v^-1], so the d_j are the factorization indices of P.
struct ColumnReduction {
  std::vector<int> degrees;
  /// Leading coefficient of det P.
  Rational det_lead;
};

/// `entries[i][j]` is the coefficient list of P(i, j) (index = exponent).
/// Returns nothing when P is singular.
using PolyMatrix = std::vector<std::vector<std::vector<Rational>>>;
std::optional<ColumnReduction> column_reduce(PolyMatrix p);

/// Splitting indices of the bundle glued by a Laurent transition matrix:
/// F_M is the direct sum of O(k_j). Nothing when det M is not a unit.
std::optional<std::vector<int>> transition_splitting_indices(const LaurentMatrix& m);

}  // namespace natbundle
