#include "builders.hpp"

#include <algorithm>
#include <numeric>

namespace nb = natbundle;

namespace nbtest {

nb::LaurentPoly poly(nb::Var v, std::initializer_list<std::pair<int, long>> terms) {
  nb::LaurentPoly p(v);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

long draw(Rng& rng, long lo, long hi) {
  if (hi <= lo) return lo;
  // Symmetric draw shifted into [lo, hi].
  const long half = (hi - lo + 1) / 2;
  long v;
  do {
    v = nb::uniform_coefficient(rng, half) + lo + half;
  } while (v < lo || v > hi);
  return v;
}

nb::RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  nb::RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = nb::uniform_coefficient(rng, bound);
  return m;
}

nb::RatMatrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t k, long bound) {
  return random_matrix(rng, rows, k, bound) * random_matrix(rng, k, cols, bound);
}

nb::LaurentPoly random_laurent(Rng& rng, nb::Var v, int lo, int hi, long bound) {
  nb::LaurentPoly p(v);
  for (int e = lo; e <= hi; ++e) p.add_term(e, nb::uniform_coefficient(rng, bound));
  return p;
}

nb::LaurentMatrix random_laurent_matrix(Rng& rng, nb::Var v, std::size_t rows, std::size_t cols, int lo, int hi,
                                        long bound) {
  nb::LaurentMatrix m(v, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_laurent(rng, v, lo, hi, bound);
  return m;
}

nb::LaurentMatrix random_unimodular(Rng& rng, nb::Var v, std::size_t n, bool plus) {
  nb::LaurentMatrix u(v, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = nb::LaurentPoly::constant(v, draw(rng, 1, 3));
    for (std::size_t j = i + 1; j < n; ++j)
      u(i, j) = plus ? random_laurent(rng, v, 0, 2, 3) : random_laurent(rng, v, -2, 0, 3);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(draw(rng, 0, long(i) - 1))]);
  nb::LaurentMatrix p(v, n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = nb::LaurentPoly::constant(v, 1);
  return p * u;
}

std::vector<int> random_components(Rng& rng, std::size_t rank, int lo, int hi) {
  std::vector<int> c(rank);
  for (int& x : c) x = static_cast<int>(draw(rng, lo, hi));
  std::sort(c.rbegin(), c.rend());
  return c;
}

nb::ExtCocycle random_cocycle(Rng& rng, nb::Var v, std::vector<int> sub, std::vector<int> quot, long bound,
                              double density) {
  nb::LaurentMatrix e(v, sub.size(), quot.size());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (std::size_t j = 0; j < quot.size(); ++j) {
      const auto [lo, hi] = nb::cocycle_band(sub[i], quot[j]);
      for (int k = lo; k <= hi; ++k)
        if (density >= 1.0 || coin(rng) < density) e(i, j).add_term(k, nb::uniform_coefficient(rng, bound));
    }
  return nb::make_cocycle(std::move(sub), std::move(quot), std::move(e));
}

nb::ConstantBundleDesc random_desc(Rng& rng, std::size_t max_rank, long bound, bool twisted) {
  for (;;) {
    const long r = draw(rng, 2, static_cast<long>(max_rank));
    const long r1 = draw(rng, 1, r - 1);
    const long r2 = r - r1;
    const long d1 = draw(rng, -4 * r1, 2 * r1);
    const long d2 = draw(rng, -2 * r2, 4 * r2);
    if (d2 * r1 - d1 * r2 <= 0) continue;
    const nb::SplittingType f1 = nb::natural_type(static_cast<std::size_t>(r1), d1);
    const nb::SplittingType f2 = nb::natural_type(static_cast<std::size_t>(r2), d2);
    nb::BigradedEta eta = nb::sample_eta(f1, f2, bound, rng);
    long sx = 0;
    long sy = 0;
    bool swapped = false;
    if (twisted) {
      sx = draw(rng, -2, 2);
      sy = draw(rng, -2, 2);
      swapped = draw(rng, 0, 1) == 1;
    }
    return nb::make_desc(static_cast<std::size_t>(r1), static_cast<std::size_t>(r2), f1, f2, std::move(eta), sx,
                         sy, swapped);
  }
}

nb::ConstantBundleDesc example_desc(Rng& rng, long bound) {
  const nb::SplittingType f1({-7});
  const nb::SplittingType f2({2, 2});
  return nb::make_desc(1, 2, f1, f2, nb::sample_eta(f1, f2, bound, rng));
}

nb::FiberAutomorphism random_fiber_automorphism(Rng& rng, std::size_t r1, std::size_t r2) {
  // Unimodular over Q[w^+-1] up to monomial factors on the diagonal blocks.
  auto unit_block = [&](std::size_t n) {
    nb::LaurentMatrix m = random_unimodular(rng, nb::Var::w, n, draw(rng, 0, 1) == 1);
    std::vector<int> shifts(n);
    for (int& s : shifts) s = static_cast<int>(draw(rng, -3, 3));
    return m * nb::LaurentMatrix::diagonal_monomials(nb::Var::w, shifts);
  };
  return nb::FiberAutomorphism{r1,
                               r2,
                               unit_block(r1),
                               random_laurent_matrix(rng, nb::Var::w, r1, r2, -2, 3, 5),
                               random_laurent_matrix(rng, nb::Var::w, r1, r2, -2, 3, 5),
                               unit_block(r2)};
}

nb::HilbertParams params(const char* alpha, const char* beta, const char* gamma, long rank) {
  return nb::HilbertParams{nb::parse_rational(alpha), nb::parse_rational(beta), nb::parse_rational(gamma), rank};
}

}  // namespace nbtest
