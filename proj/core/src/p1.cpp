#include "natbundle/p1.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "natbundle/column_reduce.hpp"
#include "natbundle/errors.hpp"
#include "natbundle/rat_matrix.hpp"

namespace natbundle {

SplittingType::SplittingType(std::vector<int> components) : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end(), std::greater<>());
}

long SplittingType::degree() const {
  return std::accumulate(components_.begin(), components_.end(), 0L);
}

SplittingType SplittingType::dual() const {
  std::vector<int> c;
  c.reserve(components_.size());
  for (int n : components_) c.push_back(-n);
  return SplittingType(std::move(c));
}

SplittingType SplittingType::twisted(int m) const {
  std::vector<int> c = components_;
  for (int& n : c) n += m;
  return SplittingType(std::move(c));
}

SplittingType SplittingType::power(std::size_t copies) const {
  std::vector<int> c;
  c.reserve(components_.size() * copies);
  for (std::size_t k = 0; k < copies; ++k) c.insert(c.end(), components_.begin(), components_.end());
  return SplittingType(std::move(c));
}

std::string SplittingType::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(components_[i]);
  }
  return s + "]";
}

SplittingType merge(const SplittingType& a, const SplittingType& b) {
  std::vector<int> c = a.components_;
  c.insert(c.end(), b.components_.begin(), b.components_.end());
  return SplittingType(std::move(c));
}

CurveCohomology h_line(long n) { return {std::max(n + 1, 0L), std::max(-n - 1, 0L)}; }

CurveCohomology h_split(const SplittingType& s, long m) {
  CurveCohomology out;
  for (int n : s.components()) {
    const auto h = h_line(n + m);
    out.h0 += h.h0;
    out.h1 += h.h1;
  }
  return out;
}

SplittingType natural_type(std::size_t r, long d) {
  if (r == 0) {
    if (d != 0) throw InvalidRequest("rank 0 bundle must have degree 0");
    return {};
  }
  const long rl = static_cast<long>(r);
  // c = floor(d / r); the type is O(c+1)^k + O(c)^(r-k) with k = d - r c.
  long c0 = d / rl;
  if (d % rl != 0 && d < 0) --c0;
  const long k = d - rl * c0;
  std::vector<int> c;
  c.reserve(r);
  for (long i = 0; i < rl; ++i) c.push_back(static_cast<int>(i < k ? c0 + 1 : c0));
  return SplittingType(std::move(c));
}

bool has_natural_cohomology(const SplittingType& s) {
  return s == natural_type(s.rank(), s.degree());
}

namespace {

constexpr long kSearchLimit = 1L << 30;

}  // namespace

SplittingType splitting_from_h0_profile(const H0Profile& profile, std::size_t rank, long degree) {
  std::map<long, long> cache;
  std::vector<std::pair<int, long>> peeled;  // (component, multiplicity)
  auto residual = [&](long m) {
    auto it = cache.find(m);
    long v = it != cache.end() ? it->second : cache.emplace(m, profile(m)).first->second;
    for (const auto& [n, mult] : peeled) v -= mult * std::max(n + m + 1, 0L);
    if (v < 0) throw ProfileError("h0 profile drops below the peeled summands at twist " + std::to_string(m));
    return v;
  };

  std::vector<int> comps;
  std::size_t remaining = rank;
  while (remaining > 0) {
    // Bracket the first twist where the residual becomes nonzero.
    long hi = 0;
    for (long step = 1; residual(hi) == 0; step *= 2) {
      hi += step;
      if (hi > kSearchLimit) throw ProfileError("h0 profile never becomes positive");
    }
    long lo = hi - 1;
    for (long step = 1; residual(lo) != 0; step *= 2) {
      lo -= step;
      if (lo < -kSearchLimit) throw ProfileError("h0 profile never vanishes");
    }
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      (residual(mid) == 0 ? lo : hi) = mid;
    }
    const long top = -hi;
    const long mult = residual(hi);
    if (static_cast<std::size_t>(mult) > remaining)
      throw ProfileError("h0 profile implies more summands than the stated rank");
    peeled.emplace_back(static_cast<int>(top), mult);
    comps.insert(comps.end(), static_cast<std::size_t>(mult), static_cast<int>(top));
    remaining -= static_cast<std::size_t>(mult);
  }
  // Past the lowest component every h0 is linear in m, so two points suffice.
  if (!comps.empty()) {
    const long past = -static_cast<long>(*std::min_element(comps.begin(), comps.end()));
    for (long m : {past, past + 1})
      if (residual(m) != 0) throw ProfileError("h0 profile exceeds the peeled summands at twist " + std::to_string(m));
  }
  SplittingType out(std::move(comps));
  if (out.degree() != degree)
    throw ProfileError("recovered splitting type " + out.str() + " has degree " +
                       std::to_string(out.degree()) + ", expected " + std::to_string(degree));
  return out;
}

long h0_from_transition(const LaurentMatrix& gamma, long m) {
  if (!gamma.is_square()) throw DimensionError("transition matrix must be square");
  const auto det = det_unit_order(gamma);
  if (!det) throw NotABundleError("transition determinant is not a unit of Q[z^+-1]");
  const std::size_t r = gamma.rows();
  if (r == 0) return 0;
  // s = z^m gamma^-1 s_minus and adj(gamma) has exponents <= (r-1) max_exp,
  // so every section has degree at most this bound.
  const long bound = m + static_cast<long>(r - 1) * *gamma.max_exponent() - det->order;
  if (bound < 0) return 0;
  const std::size_t width = static_cast<std::size_t>(bound) + 1;

  std::map<std::pair<std::size_t, long>, std::size_t> row_index;
  std::vector<std::map<std::size_t, Rational>> acc;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < r; ++c)
      for (const auto& [e, coef] : gamma(i, c).terms())
        for (std::size_t t = 0; t < width; ++t) {
          const long ex = e - m + static_cast<long>(t);
          if (ex <= 0) continue;
          auto [it, fresh] = row_index.try_emplace({i, ex}, acc.size());
          if (fresh) acc.emplace_back();
          acc[it->second][c * width + t] += coef;
        }
  SparseMatrix sys{r * width, {}};
  sys.rows.reserve(acc.size());
  for (auto& row : acc) {
    SparseRow sr;
    for (auto& [col, v] : row)
      if (v != 0) sr.emplace_back(col, std::move(v));
    sys.rows.push_back(std::move(sr));
  }
  return static_cast<long>(sys.cols - rank(sys));
}

SplittingType splitting_from_transition(const LaurentMatrix& gamma) {
  auto idx = transition_splitting_indices(gamma);
  if (!idx) throw NotABundleError("transition determinant is not a unit of Q[z^+-1]");
  return SplittingType(std::move(*idx));
}

SplittingType splitting_from_transition_profile(const LaurentMatrix& gamma) {
  const auto det = det_unit_order(gamma);
  if (!det) throw NotABundleError("transition determinant is not a unit of Q[z^+-1]");
  return splitting_from_h0_profile([&](long m) { return h0_from_transition(gamma, m); },
                                   gamma.rows(), -det->order);
}

}  // namespace natbundle
