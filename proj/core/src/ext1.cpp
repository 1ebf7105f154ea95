#include "natbundle/ext1.hpp"

#include <algorithm>
#include <map>

#include "natbundle/errors.hpp"

namespace natbundle {

std::pair<int, int> cocycle_band(int a, int b) { return {-b + 1, -a - 1}; }

ExtCocycle make_cocycle(std::vector<int> sub, std::vector<int> quot, LaurentMatrix entries) {
  if (entries.rows() != sub.size() || entries.cols() != quot.size())
    throw ShapeError("cocycle entries are " + std::to_string(entries.rows()) + "x" +
                     std::to_string(entries.cols()) + ", expected " + std::to_string(sub.size()) +
                     "x" + std::to_string(quot.size()));
  return normalized(ExtCocycle{std::move(sub), std::move(quot), std::move(entries)});
}

ExtCocycle normalized(ExtCocycle e) {
  for (std::size_t i = 0; i < e.sub.size(); ++i)
    for (std::size_t j = 0; j < e.quot.size(); ++j) {
      const auto [lo, hi] = cocycle_band(e.sub[i], e.quot[j]);
      e.entries(i, j) = e.entries(i, j).truncated(lo, hi);
    }
  return e;
}

bool is_normalized(const ExtCocycle& e) {
  for (std::size_t i = 0; i < e.sub.size(); ++i)
    for (std::size_t j = 0; j < e.quot.size(); ++j) {
      const LaurentPoly& p = e.entries(i, j);
      if (p.is_zero()) continue;
      const auto [lo, hi] = cocycle_band(e.sub[i], e.quot[j]);
      if (p.min_exponent() < lo || p.max_exponent() > hi) return false;
    }
  return true;
}

ExtCocycle zero_cocycle(Var var, std::vector<int> sub, std::vector<int> quot) {
  LaurentMatrix m(var, sub.size(), quot.size());
  return ExtCocycle{std::move(sub), std::move(quot), std::move(m)};
}

long ext_dim(const SplittingType& f2, const SplittingType& f1) {
  long d = 0;
  for (int a : f1.components())
    for (int b : f2.components()) d += h_line(a - b).h1;
  return d;
}

LaurentMatrix assemble_transition(const ExtCocycle& e) {
  const std::size_t s = e.sub.size();
  const std::size_t r = e.quot.size();
  LaurentMatrix g(e.var(), s + r, s + r);
  for (std::size_t i = 0; i < s; ++i) g(i, i) = LaurentPoly::monomial(e.var(), -e.sub[i]);
  for (std::size_t j = 0; j < r; ++j) g(s + j, s + j) = LaurentPoly::monomial(e.var(), -e.quot[j]);
  g.set_block(0, s, e.entries);
  return g;
}

namespace {

struct Layout {
  std::vector<std::size_t> offset;
  std::size_t total = 0;
};

// Offsets of the H0 basis of F2(m) (per column summand).
Layout h0_layout(const std::vector<int>& quot, long m) {
  Layout l;
  for (int b : quot) {
    l.offset.push_back(l.total);
    l.total += static_cast<std::size_t>(h_line(b + m).h0);
  }
  return l;
}

// Offsets of the H1 basis of F1(m) (per row summand).
Layout h1_layout(const std::vector<int>& sub, long m) {
  Layout l;
  for (int a : sub) {
    l.offset.push_back(l.total);
    l.total += static_cast<std::size_t>(h_line(a + m).h1);
  }
  return l;
}

}  // namespace

SparseMatrix connecting_map_sparse(const ExtCocycle& e, long m) {
  const Layout cols = h0_layout(e.quot, m);
  const Layout rows = h1_layout(e.sub, m);
  std::vector<std::map<std::size_t, Rational>> acc(rows.total);
  for (std::size_t i = 0; i < e.sub.size(); ++i) {
    const long top = -e.sub[i] - m - 1;  // H1 monomials v^1 .. v^top
    if (top < 1) continue;
    for (std::size_t j = 0; j < e.quot.size(); ++j) {
      const long deg = e.quot[j] + m;  // H0 monomials v^0 .. v^deg
      if (deg < 0) continue;
      for (const auto& [ex, c] : e.entries(i, j).terms())
        for (long k = 0; k <= deg; ++k) {
          const long t = ex - m + k;
          if (t < 1 || t > top) continue;
          acc[rows.offset[i] + static_cast<std::size_t>(t - 1)]
             [cols.offset[j] + static_cast<std::size_t>(k)] += c;
        }
    }
  }
  SparseMatrix out{cols.total, {}};
  out.rows.reserve(acc.size());
  for (auto& row : acc) {
    SparseRow sr;
    for (auto& [col, v] : row)
      if (v != 0) sr.emplace_back(col, std::move(v));
    out.rows.push_back(std::move(sr));
  }
  return out;
}

RatMatrix connecting_map(const ExtCocycle& e, long m) {
  const SparseMatrix s = connecting_map_sparse(e, m);
  RatMatrix out(s.rows.size(), s.cols);
  for (std::size_t i = 0; i < s.rows.size(); ++i)
    for (const auto& [j, v] : s.rows[i]) out(i, j) = v;
  return out;
}

TwistInterval relevant_twists(const ExtCocycle& e) {
  if (e.sub.empty() || e.quot.empty()) return {};
  const long lo = -*std::max_element(e.quot.begin(), e.quot.end());
  const long hi = -*std::min_element(e.sub.begin(), e.sub.end()) - 2;
  return {lo, hi};
}

std::vector<TwistRank> connecting_ranks(const ExtCocycle& e) {
  std::vector<TwistRank> out;
  const TwistInterval iv = relevant_twists(e);
  for (long m = iv.lo; m <= iv.hi; ++m) {
    const SparseMatrix c = connecting_map_sparse(e, m);
    out.push_back({m, c.rows.size(), c.cols, rank(c)});
  }
  return out;
}

SplittingType splitting_of_extension(const ExtCocycle& e) {
  const SplittingType f1 = e.f1();
  const SplittingType f2 = e.f2();
  const TwistInterval iv = relevant_twists(e);
  std::map<long, std::size_t> ranks;
  auto profile = [&](long m) -> long {
    long h = h_split(f1, m).h0 + h_split(f2, m).h0;
    if (m < iv.lo || m > iv.hi) return h;
    auto it = ranks.find(m);
    if (it == ranks.end()) it = ranks.emplace(m, rank(connecting_map_sparse(e, m))).first;
    return h - static_cast<long>(it->second);
  };
  return splitting_from_h0_profile(profile, f1.rank() + f2.rank(), f1.degree() + f2.degree());
}

bool is_hn_top(const ExtCocycle& e) {
  const TwistInterval iv = relevant_twists(e);
  for (long m = iv.lo; m <= iv.hi; ++m) {
    const SparseMatrix c = connecting_map_sparse(e, m);
    if (rank(c) != std::min(c.rows.size(), c.cols)) return false;
  }
  return true;
}

}  // namespace natbundle
