#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "natbundle/rational.hpp"

namespace natbundle {

/// Which coordinate a Laurent polynomial lives in: z on the fibre line,
/// w on the base line.
enum class Var : char { z = 'z', w = 'w' };

char var_name(Var v);
Var parse_var(std::string_view name);

/// Element of Q[v, v^-1], stored sparsely as exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  explicit LaurentPoly(Var var = Var::z) : var_(var) {}
  LaurentPoly(Var var, Terms terms);

  static LaurentPoly constant(Var var, const Rational& c);
  static LaurentPoly monomial(Var var, int exponent, const Rational& c = 1);

  Var var() const { return var_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of v^k (zero when absent).
  Rational coeff(int k) const;
  void add_term(int k, const Rational& c);

  /// Only meaningful when nonzero.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  /// Drop every term whose exponent lies outside [lo, hi].
  LaurentPoly truncated(int lo, int hi) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "3*z^-1 + 1/2 + z^2".
  std::string pretty() const;

 private:
  void check_var(const LaurentPoly& o) const;

  Var var_;
  Terms terms_;
};

/// Dense matrix of Laurent polynomials in one variable, row-major.
class LaurentMatrix {
 public:
  LaurentMatrix(Var var, std::size_t rows, std::size_t cols);
  LaurentMatrix() : LaurentMatrix(Var::z, 0, 0) {}

  static LaurentMatrix identity(Var var, std::size_t n);
  /// diag(v^e_0, ..., v^e_{n-1}).
  static LaurentMatrix diagonal_monomials(Var var, const std::vector<int>& exponents);

  Var var() const { return var_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<LaurentPoly>& entries() const { return entries_; }

  LaurentMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const LaurentMatrix& b);
  LaurentMatrix transpose() const;
  /// Entries with every coefficient mapped through v -> v^-1.
  LaurentMatrix inverted_variable() const;

  bool is_zero() const;
  /// Largest |exponent| over all nonzero entries (0 for the zero matrix).
  int max_abs_exponent() const;
  std::optional<int> max_exponent() const;
  std::optional<int> min_exponent() const;

  LaurentMatrix& operator+=(const LaurentMatrix& o);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.var_ == b.var_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Var var_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<LaurentPoly> entries_;
};

LaurentMatrix block_diagonal(const LaurentMatrix& a, const LaurentMatrix& b);

/// det(M) = lead * v^order when the determinant is a unit of Q[v^+-1].
struct UnitDeterminant {
  int order;
  Rational lead;
  friend bool operator==(const UnitDeterminant&, const UnitDeterminant&) = default;
};

/// Absent when det(M) is zero or not a monomial. Throws DimensionError for
/// non-square input. The bundle glued by M has degree -order.
std::optional<UnitDeterminant> det_unit_order(const LaurentMatrix& m);

}  // namespace natbundle
