#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "natbundle/laurent.hpp"
#include "natbundle/p1.hpp"
#include "natbundle/rat_matrix.hpp"

namespace natbundle {

/// A class in Ext^1(F2, F1) for split F1 = sum O(a_i), F2 = sum O(b_j),
/// stored as the upper-right block of the transition matrix
///
///     [ diag(v^-a_i)   entries      ]
///     [ 0              diag(v^-b_j) ]
///
/// Summand lists are kept in row/column order and need not be sorted.
/// Entry (i, j) in normal form is supported on exponents -b_j+1 .. -a_i-1;
/// everything outside that band is a coboundary.
struct ExtCocycle {
  std::vector<int> sub;   // a_i, one per row
  std::vector<int> quot;  // b_j, one per column
  LaurentMatrix entries;

  Var var() const { return entries.var(); }
  SplittingType f1() const { return SplittingType(sub); }
  SplittingType f2() const { return SplittingType(quot); }
};

/// Validates the shape and reduces every entry to its normal-form band.
ExtCocycle make_cocycle(std::vector<int> sub, std::vector<int> quot, LaurentMatrix entries);

/// Exponent band [lo, hi] of a normal-form entry between O(b) and O(a).
std::pair<int, int> cocycle_band(int a, int b);

ExtCocycle normalized(ExtCocycle e);
bool is_normalized(const ExtCocycle& e);

/// The zero class.
ExtCocycle zero_cocycle(Var var, std::vector<int> sub, std::vector<int> quot);

struct TwistInterval {
  long lo = 0;
  long hi = -1;
  bool empty() const { return lo > hi; }
  friend bool operator==(const TwistInterval&, const TwistInterval&) = default;
};

/// dim Ext^1(F2, F1) = sum over pairs of h1(O(a_i - b_j)).
long ext_dim(const SplittingType& f2, const SplittingType& f1);

LaurentMatrix assemble_transition(const ExtCocycle& e);

/// Matrix of H0(F2(m)) -> H1(F1(m)). Columns: monomials v^0..v^(b_j+m) of each
/// quotient summand in order. Rows: canonical H1 monomials v^1..v^(-a_i-m-1)
/// of each sub summand in order.
RatMatrix connecting_map(const ExtCocycle& e, long m);
SparseMatrix connecting_map_sparse(const ExtCocycle& e, long m);

/// Outside this interval the source or the target of the connecting map is zero.
TwistInterval relevant_twists(const ExtCocycle& e);

struct TwistRank {
  long m = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  bool maximal() const { return rank == std::min(rows, cols); }
  friend bool operator==(const TwistRank&, const TwistRank&) = default;
};

/// Connecting-map ranks at every relevant twist.
std::vector<TwistRank> connecting_ranks(const ExtCocycle& e);

/// Splitting type of the middle term, from the long exact sequence
/// h0(G(m)) = h0(F1(m)) + h0(F2(m)) - rank c(m).
SplittingType splitting_of_extension(const ExtCocycle& e);

/// Every connecting map has maximal rank.
bool is_hn_top(const ExtCocycle& e);

}  // namespace natbundle
