#include "natbundle/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "natbundle/errors.hpp"

namespace natbundle {

char var_name(Var v) { return static_cast<char>(v); }

Var parse_var(std::string_view name) {
  if (name == "z") return Var::z;
  if (name == "w") return Var::w;
  throw ParseError("unknown Laurent variable '" + std::string(name) + "' (expected z or w)");
}

LaurentPoly::LaurentPoly(Var var, Terms terms) : var_(var), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::constant(Var var, const Rational& c) { return monomial(var, 0, c); }

LaurentPoly LaurentPoly::monomial(Var var, int exponent, const Rational& c) {
  LaurentPoly p(var);
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

Rational LaurentPoly::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::truncated(int lo, int hi) const {
  LaurentPoly out(var_);
  for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it)
    out.terms_.emplace_hint(out.terms_.end(), it->first, it->second);
  return out;
}

void LaurentPoly::check_var(const LaurentPoly& o) const {
  // The zero polynomial is variable-agnostic.
  if (var_ != o.var_ && !terms_.empty() && !o.terms_.empty())
    throw ShapeError("mixing Laurent polynomials in different variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_var(o);
  if (terms_.empty()) var_ = o.var_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_var(o);
  if (terms_.empty()) var_ = o.var_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_var(b);
  LaurentPoly out(a.is_zero() ? b.var() : a.var());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPoly::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    if (e == 0) {
      os << to_string(mag);
      continue;
    }
    if (!unit) os << to_string(mag) << "*";
    os << var_name(var_);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentMatrix::LaurentMatrix(Var var, std::size_t rows, std::size_t cols)
    : var_(var), rows_(rows), cols_(cols), entries_(rows * cols, LaurentPoly(var)) {}

LaurentMatrix LaurentMatrix::identity(Var var, std::size_t n) {
  LaurentMatrix m(var, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(var, 1);
  return m;
}

LaurentMatrix LaurentMatrix::diagonal_monomials(Var var, const std::vector<int>& exponents) {
  LaurentMatrix m(var, exponents.size(), exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i)
    m(i, i) = LaurentPoly::monomial(var, exponents[i]);
  return m;
}

LaurentMatrix LaurentMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  LaurentMatrix b(var_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void LaurentMatrix::set_block(std::size_t r0, std::size_t c0, const LaurentMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix t(var_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LaurentMatrix LaurentMatrix::inverted_variable() const {
  LaurentMatrix t(var_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    LaurentPoly p(var_);
    for (const auto& [e, c] : entries_[k].terms()) p.add_term(-e, c);
    t.entries_[k] = std::move(p);
  }
  return t;
}

bool LaurentMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& p) { return p.is_zero(); });
}

int LaurentMatrix::max_abs_exponent() const {
  int m = 0;
  for (const auto& p : entries_)
    if (!p.is_zero()) m = std::max({m, std::abs(p.min_exponent()), std::abs(p.max_exponent())});
  return m;
}

std::optional<int> LaurentMatrix::max_exponent() const {
  std::optional<int> m;
  for (const auto& p : entries_)
    if (!p.is_zero()) m = m ? std::max(*m, p.max_exponent()) : p.max_exponent();
  return m;
}

std::optional<int> LaurentMatrix::min_exponent() const {
  std::optional<int> m;
  for (const auto& p : entries_)
    if (!p.is_zero()) m = m ? std::min(*m, p.min_exponent()) : p.min_exponent();
  return m;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  if (var_ != o.var_) throw ShapeError("matrix sum mixes variables");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  if (a.var_ != b.var_) throw ShapeError("matrix product mixes variables");
  LaurentMatrix out(a.var_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

LaurentMatrix block_diagonal(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out(a.var(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

}  // namespace natbundle
