#include "natbundle/rat_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "natbundle/errors.hpp"

namespace natbundle {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match column count");
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

SparseMatrix to_sparse(const RatMatrix& m) {
  SparseMatrix s{m.cols(), {}};
  s.rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) row.emplace_back(j, m(i, j));
    s.rows.push_back(std::move(row));
  }
  return s;
}

namespace {

// row <- row - factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

// Row echelon form built one row at a time; each stored pivot row has
// leading coefficient 1.
class Echelon {
 public:
  bool insert(SparseRow row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) break;
      const Rational factor = row.front().second;
      row = axpy(row, factor, it->second);
    }
    if (row.empty()) return false;
    const Rational inv = 1 / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    const std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

  // Fully reduce so every pivot column is zero outside its own row.
  void reduce() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      SparseRow& row = it->second;
      for (std::size_t k = 1; k < row.size();) {
        auto p = pivots_.find(row[k].first);
        if (p == pivots_.end()) {
          ++k;
          continue;
        }
        const Rational factor = row[k].second;
        row = axpy(row, factor, p->second);
        // Entries before k are unaffected since pivot rows start at their lead.
      }
    }
  }

  const std::map<std::size_t, SparseRow>& pivots() const { return pivots_; }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(x & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> reduce_mod_p(const Rational& q) {
  const std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (d == 0) return std::nullopt;
  const std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
  if (d == 1) return n;
  return mulmod(n, powmod(d, kPrime - 2));
}

}  // namespace

std::optional<std::size_t> rank_mod_p(const SparseMatrix& m) {
  using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;
  std::map<std::size_t, Row> pivots;
  for (const auto& src : m.rows) {
    Row row;
    row.reserve(src.size());
    for (const auto& [c, v] : src) {
      auto r = reduce_mod_p(v);
      if (!r) return std::nullopt;
      if (*r) row.emplace_back(c, *r);
    }
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const std::uint64_t f = row.front().second;
      Row out;
      out.reserve(row.size() + it->second.size());
      auto a = row.begin();
      auto b = it->second.begin();
      while (a != row.end() || b != it->second.end()) {
        if (b == it->second.end() || (a != row.end() && a->first < b->first)) {
          out.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
          out.emplace_back(b->first, kPrime - mulmod(f, b->second));
          if (out.back().second == kPrime) out.back().second = 0;
          if (out.back().second == 0) out.pop_back();
          ++b;
        } else {
          std::uint64_t s = mulmod(f, b->second);
          std::uint64_t v = a->second >= s ? a->second - s : a->second + kPrime - s;
          if (v) out.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      row = std::move(out);
    }
    if (row.empty()) continue;
    const std::uint64_t inv = powmod(row.front().second, kPrime - 2);
    for (auto& [c, v] : row) v = mulmod(v, inv);
    const std::size_t lead = row.front().first;
    pivots.emplace(lead, std::move(row));
  }
  return pivots.size();
}

std::size_t rank(const SparseMatrix& m) {
  const std::size_t bound = std::min(m.rows.size(), m.cols);
  if (bound == 0) return 0;
  // A nonzero minor mod p is a nonzero minor over Q, so a full rank mod p
  // certifies full rank; anything less falls through to exact elimination.
  if (auto rp = rank_mod_p(m); rp && *rp == bound) return bound;
  Echelon e;
  for (const auto& row : m.rows) {
    e.insert(row);
    if (e.rank() == bound) break;
  }
  return e.rank();
}

std::size_t rank(const RatMatrix& m) { return rank(to_sparse(m)); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  Echelon e;
  for (auto& row : to_sparse(m).rows) e.insert(std::move(row));
  e.reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& [c, row] : e.pivots()) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (const auto& [c, row] : e.pivots()) {
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& kv, std::size_t col) { return kv.first < col; });
      if (it != row.end() && it->first == f) v[c] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace natbundle
