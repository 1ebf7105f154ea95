#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "natbundle/errors.hpp"
#include "natbundle/qbundle.hpp"

namespace natbundle {
namespace {

// Laurent polynomial in (z, w): exponent pair -> nonzero coefficient.
using BiPoly = std::map<std::pair<int, int>, Rational>;

struct BiMatrix {
  std::size_t n = 0;
  std::vector<BiPoly> e;
  explicit BiMatrix(std::size_t size = 0) : n(size), e(size * size) {}
  BiPoly& operator()(std::size_t i, std::size_t j) { return e[i * n + j]; }
  const BiPoly& operator()(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

void add_into(BiPoly& acc, const BiPoly& a, const BiPoly& b, const Rational& sign = 1) {
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const std::pair<int, int> k{ea.first + eb.first, ea.second + eb.second};
      Rational& slot = acc[k];
      slot += sign * ca * cb;
      if (slot == 0) acc.erase(k);
    }
}

BiMatrix mul(const BiMatrix& a, const BiMatrix& b) {
  BiMatrix out(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      if (a(i, k).empty()) continue;
      for (std::size_t j = 0; j < a.n; ++j) add_into(out(i, j), a(i, k), b(k, j));
    }
  return out;
}

BiMatrix transpose(const BiMatrix& a) {
  BiMatrix out(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) out(j, i) = a(i, j);
  return out;
}

BiPoly mono(int ez, int ew, const Rational& c = 1) { return BiPoly{{{ez, ew}, c}}; }

BiPoly from_w(const LaurentPoly& p, int ez = 0) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) out[{ez, e}] = c;
  return out;
}

std::pair<int, int> max_exponents(const BiMatrix& a) {
  int mz = 0;
  int mw = 0;
  bool any = false;
  for (const auto& p : a.e)
    for (const auto& [e, c] : p) {
      mz = any ? std::max(mz, e.first) : e.first;
      mw = any ? std::max(mw, e.second) : e.second;
      any = true;
    }
  return {mz, mw};
}

// Gluing data on the four charts; every map starts on the (z, w) chart.
struct Gluing {
  BiMatrix gamma;      // (z, w)   -> (1/z, w)
  BiMatrix gamma_inv;
  BiMatrix alpha;      // (z, w)   -> (z, 1/w)
  BiMatrix alpha_inv;
  BiMatrix corner;     // (z, w)   -> (1/z, 1/w)
  BiMatrix corner_inv;

  Gluing dual() const {
    // Inverse transpose on every chart change.
    return Gluing{transpose(gamma_inv), transpose(gamma), transpose(alpha_inv),
                  transpose(alpha),     transpose(corner_inv), transpose(corner)};
  }
};

Gluing gluing_of(const ConstantBundleDesc& desc) {
  const std::size_t r1 = desc.r1;
  const std::size_t r = desc.rank();
  BiMatrix gamma(r);
  BiMatrix gamma_inv(r);
  for (std::size_t i = 0; i < r; ++i) {
    gamma(i, i) = mono(i < r1 ? 0 : 1, 0);
    gamma_inv(i, i) = mono(i < r1 ? 0 : -1, 0);
  }
  // Fibre automorphism on the (z, w) chart and its inverse
  // [[A^-1, -A^-1 B D^-1], [0, D^-1]] with A, D monomial diagonal.
  BiMatrix alpha(r);
  BiMatrix alpha_inv(r);
  const auto& f1 = desc.f1.components();
  const auto& f2 = desc.f2.components();
  for (std::size_t i = 0; i < r1; ++i) {
    alpha(i, i) = mono(0, -f1[i]);
    alpha_inv(i, i) = mono(0, f1[i]);
  }
  for (std::size_t j = 0; j < desc.r2; ++j) {
    alpha(r1 + j, r1 + j) = mono(0, -f2[j]);
    alpha_inv(r1 + j, r1 + j) = mono(0, f2[j]);
  }
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < desc.r2; ++j) {
      BiPoly b = from_w(desc.eta.eta0.entries(i, j), 0);
      for (const auto& [e, c] : from_w(desc.eta.eta1.entries(i, j), 1)) b[e] += c;
      BiPoly neg;
      add_into(neg, mono(0, f1[i]), b, -1);
      BiPoly inv;
      add_into(inv, neg, mono(0, f2[j]));
      alpha(i, r1 + j) = std::move(b);
      alpha_inv(i, r1 + j) = std::move(inv);
    }
  // The far chart change goes through (1/z, w): alpha_- gamma with
  // alpha_- = gamma alpha gamma^-1, so the composite is gamma alpha.
  BiMatrix corner = mul(gamma, alpha);
  BiMatrix corner_inv = mul(alpha_inv, gamma_inv);
  return Gluing{std::move(gamma), std::move(gamma_inv), std::move(alpha),
                std::move(alpha_inv), std::move(corner), std::move(corner_inv)};
}

// h0 with sections truncated to z-degree <= dz and w-degree <= dw.
long h0_truncated(const Gluing& g, long n, long m, long dz, long dw) {
  if (dz < 0 || dw < 0) return 0;
  const std::size_t r = g.gamma.n;
  const std::size_t bz = static_cast<std::size_t>(dz + 1);
  const std::size_t bw = static_cast<std::size_t>(dw + 1);
  const std::size_t unknowns = r * bz * bw;
  auto var = [&](std::size_t j, long p, long q) {
    return (j * bz + static_cast<std::size_t>(p)) * bw + static_cast<std::size_t>(q);
  };
  // (chart, row, z-exponent, w-exponent) -> constraint row.
  std::map<std::tuple<int, std::size_t, long, long>, std::map<std::size_t, Rational>> rows;
  struct Chart {
    const BiMatrix* map;
    long tz;  // twist exponent in z
    long tw;
    bool z_neg;  // chart ring uses 1/z
    bool w_neg;
  };
  const Chart charts[] = {{&g.gamma, -n, 0, true, false},
                          {&g.alpha, 0, -m, false, true},
                          {&g.corner, -n, -m, true, true}};
  for (int c = 0; c < 3; ++c) {
    const Chart& ch = charts[c];
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (const auto& [e, coef] : (*ch.map)(i, j))
          for (long p = 0; p <= dz; ++p)
            for (long q = 0; q <= dw; ++q) {
              const long ez = e.first + ch.tz + p;
              const long ew = e.second + ch.tw + q;
              const bool ok_z = ch.z_neg ? ez <= 0 : ez >= 0;
              const bool ok_w = ch.w_neg ? ew <= 0 : ew >= 0;
              if (ok_z && ok_w) continue;
              rows[{c, i, ez, ew}][var(j, p, q)] += coef;
            }
  }
  SparseMatrix sm{unknowns, {}};
  sm.rows.reserve(rows.size());
  for (auto& [key, row] : rows) {
    SparseRow sr;
    for (auto& [col, v] : row)
      if (v != 0) sr.emplace_back(col, std::move(v));
    if (!sr.empty()) sm.rows.push_back(std::move(sr));
  }
  return static_cast<long>(unknowns - rank(sm));
}

long h0_four_chart(const Gluing& g, long n, long m) {
  // A section s on the (z, w) chart equals z^n gamma^-1 u with u polynomial in
  // 1/z, and w^m alpha^-1 v with v polynomial in 1/w; this bounds its degrees.
  const long dz = n + max_exponents(g.gamma_inv).first;
  const long dw = m + max_exponents(g.alpha_inv).second;
  const long h = h0_truncated(g, n, m, dz, dw);
  if (h0_truncated(g, n, m, dz + 1, dw + 1) != h)
    throw OracleInconclusive("section count did not stabilize at twist (" + std::to_string(n) +
                             ", " + std::to_string(m) + ")");
  return h;
}

}  // namespace

Cohomology3 cech_oracle_h(const ConstantBundleDesc& desc, long n, long m) {
  const auto [ni, mi] = desc.to_internal(n, m);
  const Gluing g = gluing_of(desc);
  Cohomology3 out;
  out.h0 = h0_four_chart(g, ni, mi);
  out.h2 = h0_four_chart(g.dual(), -ni - 2, -mi - 2);
  out.h1 = out.h0 + out.h2 - chi_Q(desc, n, m);
  if (out.h1 < 0)
    throw OracleInconclusive("negative h1 at twist (" + std::to_string(n) + ", " + std::to_string(m) + ")");
  return out;
}

}  // namespace natbundle
