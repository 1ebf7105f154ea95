#include "natbundle/column_reduce.hpp"

#include <algorithm>
#include <numeric>

#include "natbundle/errors.hpp"
#include "natbundle/rat_matrix.hpp"

namespace natbundle {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int degree(const std::vector<Rational>& c) { return static_cast<int>(c.size()) - 1; }

Rational determinant(RatMatrix a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = 1 / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        if (a(col, j) != 0) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

// v^shift * M as a polynomial matrix; shift must clear every negative exponent.
PolyMatrix to_poly(const LaurentMatrix& m, int shift) {
  PolyMatrix p(m.rows(), std::vector<std::vector<Rational>>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPoly& e = m(i, j);
      if (e.is_zero()) continue;
      auto& c = p[i][j];
      c.assign(static_cast<std::size_t>(e.max_exponent() + shift + 1), Rational(0));
      for (const auto& [k, v] : e.terms()) c[static_cast<std::size_t>(k + shift)] = v;
    }
  return p;
}

}  // namespace

std::optional<ColumnReduction> column_reduce(PolyMatrix p) {
  const std::size_t n = p.size();
  Rational scale = 1;  // det(P_current) = scale * det(P_original)
  std::vector<int> deg(n);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) {
      int d = -1;
      for (std::size_t i = 0; i < n; ++i) d = std::max(d, degree(p[i][j]));
      if (d < 0) return std::nullopt;
      deg[j] = d;
    }
    RatMatrix lead(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (degree(p[i][j]) == deg[j]) lead(i, j) = p[i][j].back();
    auto ker = kernel_basis(lead);
    if (ker.empty()) return ColumnReduction{deg, determinant(lead) / scale};

    const RatVector& c = ker.front();
    std::size_t target = n;
    for (std::size_t j = 0; j < n; ++j)
      if (c[j] != 0 && (target == n || deg[j] > deg[target])) target = j;

    // col_target <- sum_j c_j v^(deg_target - deg_j) col_j kills the leading row vector.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> acc(static_cast<std::size_t>(deg[target] + 1), Rational(0));
      for (std::size_t j = 0; j < n; ++j) {
        if (c[j] == 0) continue;
        const std::size_t off = static_cast<std::size_t>(deg[target] - deg[j]);
        const auto& src = p[i][j];
        for (std::size_t k = 0; k < src.size(); ++k)
          if (src[k] != 0) acc[k + off] += c[j] * src[k];
      }
      trim(acc);
      p[i][target] = std::move(acc);
    }
    scale *= c[target];
  }
}

std::optional<UnitDeterminant> det_unit_order(const LaurentMatrix& m) {
  if (!m.is_square()) throw DimensionError("det_unit_order needs a square matrix");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return UnitDeterminant{0, 1};
  const auto lo = m.min_exponent();
  if (!lo) return std::nullopt;
  const int shift = std::max(0, -*lo);
  auto top = column_reduce(to_poly(m, shift));
  if (!top) return std::nullopt;
  const int deg_det = std::accumulate(top->degrees.begin(), top->degrees.end(), 0);

  // Reversed polynomial u^K P(1/u) exposes the lowest-order term of det P.
  const int kmax = *m.max_exponent() + shift;
  auto bottom = column_reduce(to_poly(m.inverted_variable(), *m.max_exponent()));
  if (!bottom) return std::nullopt;
  const int ord_det = n * kmax - std::accumulate(bottom->degrees.begin(), bottom->degrees.end(), 0);
  if (ord_det != deg_det) return std::nullopt;
  return UnitDeterminant{deg_det - n * shift, top->det_lead};
}

std::optional<std::vector<int>> transition_splitting_indices(const LaurentMatrix& m) {
  if (!m.is_square()) throw DimensionError("transition matrix must be square");
  if (m.rows() == 0) return std::vector<int>{};
  if (!det_unit_order(m)) return std::nullopt;
  const int shift = std::max(0, -*m.min_exponent());
  auto red = column_reduce(to_poly(m, shift));
  std::vector<int> out;
  out.reserve(red->degrees.size());
  for (int d : red->degrees) out.push_back(shift - d);
  return out;
}

}  // namespace natbundle
