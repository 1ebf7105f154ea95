#include "natbundle/qbundle.hpp"

#include <sstream>

#include "natbundle/errors.hpp"

namespace natbundle {

bool HilbertParams::integral() const {
  const Rational r = rank;
  return is_integral(r * alpha) && is_integral(r * beta) && is_integral(r * (alpha * beta - gamma));
}

Rational HilbertParams::scaled_value(long x, long y) const {
  const Rational rx = x;
  const Rational ry = y;
  return Rational(rank) * ((rx + alpha) * (ry + beta) - gamma);
}

SplittingType ConstantBundleDesc::fiber_type() const {
  std::vector<int> c(r1, 0);
  c.insert(c.end(), r2, -1);
  return SplittingType(std::move(c));
}

std::pair<long, long> ConstantBundleDesc::to_internal(long n, long m) const {
  if (axis_swapped) std::swap(n, m);
  return {n + sx, m + sy};
}

namespace {

void check_eta_shape(const ExtCocycle& e, const SplittingType& f1, const SplittingType& f2,
                     const char* which) {
  if (e.var() != Var::w) throw ShapeError(std::string(which) + " must be a cocycle in w");
  if (e.sub != f1.components() || e.quot != f2.components())
    throw ShapeError(std::string(which) + " does not match F1 = " + f1.str() + ", F2 = " + f2.str());
}

}  // namespace

ConstantBundleDesc make_desc(std::size_t r1, std::size_t r2, SplittingType f1, SplittingType f2,
                             BigradedEta eta, long sx, long sy, bool axis_swapped) {
  if (f1.rank() != r1 || f2.rank() != r2)
    throw ShapeError("F1 and F2 must have ranks r1 = " + std::to_string(r1) +
                     " and r2 = " + std::to_string(r2));
  if (r1 + r2 == 0) throw ShapeError("constant bundle of rank 0");
  check_eta_shape(eta.eta0, f1, f2, "eta0");
  check_eta_shape(eta.eta1, f1, f2, "eta1");
  eta.eta0 = normalized(std::move(eta.eta0));
  eta.eta1 = normalized(std::move(eta.eta1));
  return ConstantBundleDesc{r1, r2, std::move(f1), std::move(f2), std::move(eta), sx, sy, axis_swapped};
}

FiberAutomorphism operator*(const FiberAutomorphism& x, const FiberAutomorphism& y) {
  if (x.r1 != y.r1 || x.r2 != y.r2) throw ShapeError("fiber automorphisms of different fiber types");
  // (B0 + z B1) composes linearly since the diagonal blocks do not involve z.
  return FiberAutomorphism{x.r1,
                           x.r2,
                           x.a * y.a,
                           x.a * y.b0 + x.b0 * y.d,
                           x.a * y.b1 + x.b1 * y.d,
                           x.d * y.d};
}

FiberAutomorphism assemble_lambda(const ConstantBundleDesc& desc) {
  std::vector<int> ea;
  std::vector<int> ed;
  for (int a : desc.f1.components()) ea.push_back(-a);
  for (int b : desc.f2.components()) ed.push_back(-b);
  return FiberAutomorphism{desc.r1,
                           desc.r2,
                           LaurentMatrix::diagonal_monomials(Var::w, ea),
                           desc.eta.eta0.entries,
                           desc.eta.eta1.entries,
                           LaurentMatrix::diagonal_monomials(Var::w, ed)};
}

std::string pretty(const FiberAutomorphism& g) {
  std::ostringstream os;
  const std::size_t r = g.r1 + g.r2;
  for (std::size_t i = 0; i < r; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < r; ++j) {
      if (j) os << " | ";
      if (i < g.r1 && j < g.r1) {
        os << g.a(i, j).pretty();
      } else if (i < g.r1) {
        const std::size_t c = j - g.r1;
        os << "(" << g.b0(i, c).pretty() << ")*z0 + (" << g.b1(i, c).pretty() << ")*z1";
      } else if (j < g.r1) {
        os << "0";
      } else {
        os << g.d(i - g.r1, j - g.r1).pretty();
      }
    }
    os << " ]\n";
  }
  return os.str();
}

LaurentMatrix gamma_action(const FiberAutomorphism& g, long n) {
  // Copies of each part: O^r1 contributes h(O(n)), O(-1)^r2 contributes h(O(n-1)).
  const bool h0 = n >= 0;
  const std::size_t c1 = static_cast<std::size_t>(h0 ? n + 1 : -n - 1);
  const std::size_t c2 = static_cast<std::size_t>(h0 ? n : -n);
  const std::size_t top = g.r1 * c1;
  LaurentMatrix out(Var::w, top + g.r2 * c2, top + g.r2 * c2);
  for (std::size_t k = 0; k < c1; ++k) out.set_block(k * g.r1, k * g.r1, g.a);
  for (std::size_t k = 0; k < c2; ++k) out.set_block(top + k * g.r2, top + k * g.r2, g.d);
  for (std::size_t k = 0; k < c2; ++k) {
    const std::size_t col = top + k * g.r2;
    if (h0) {
      // Sections: z^k in the O(-1) part maps to B0 z^k + B1 z^(k+1).
      out.set_block(k * g.r1, col, g.b0);
      out.set_block((k + 1) * g.r1, col, g.b1);
    } else {
      // Cochains z^(k+1) map to B0 z^k + B1 z^(k+1); z^0 is a coboundary
      // and so is z^(k+1) past the top of H1(O(n)).
      if (k >= 1) out.set_block((k - 1) * g.r1, col, g.b0);
      if (k < c1) out.set_block(k * g.r1, col, g.b1);
    }
  }
  return out;
}

LaurentMatrix gamma_action(const ConstantBundleDesc& desc, long n) {
  return gamma_action(assemble_lambda(desc), n);
}

SplittingType pushforward_splitting(const ConstantBundleDesc& desc, long n) {
  return splitting_from_transition(gamma_action(desc, n));
}

ExtCocycle pushforward_cocycle(const ConstantBundleDesc& desc, long n) {
  const LaurentMatrix g = gamma_action(desc, n);
  const std::size_t s = desc.r1 * static_cast<std::size_t>(n >= 0 ? n + 1 : -n - 1);
  const std::size_t size = g.rows();
  // Read the split parts off the diagonal; both diagonal blocks must be
  // monomial diagonal and the lower-left block must vanish.
  std::vector<int> sub;
  std::vector<int> quot;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const bool upper_right = i < s && j >= s;
      if (i == j || upper_right || g(i, j).is_zero()) continue;
      throw ShapeError("pushforward transition is not in extension form");
    }
    const LaurentPoly& d = g(i, i);
    if (d.size() != 1 || d.terms().begin()->second != 1)
      throw ShapeError("pushforward transition has a non-monomial diagonal");
    (i < s ? sub : quot).push_back(-d.min_exponent());
  }
  return make_cocycle(std::move(sub), std::move(quot), g.block(0, s, s, size - s));
}

SplittingType pushforward_type(const ConstantBundleDesc& desc, long n) {
  return splitting_of_extension(pushforward_cocycle(desc, n));
}

long chi_Q(const ConstantBundleDesc& desc, long x, long y) {
  const auto [n, m] = desc.to_internal(x, y);
  const long r = static_cast<long>(desc.rank());
  const long chi_f = static_cast<long>(desc.r1);
  const long chi_f1 = desc.f1.degree() + static_cast<long>(desc.r1);
  const long chi_f12 = chi_f1 + desc.f2.degree() + static_cast<long>(desc.r2);
  return r * n * m + chi_f12 * n + chi_f * m + chi_f1;
}

HilbertParams hilbert_params(const ConstantBundleDesc& desc) {
  const long r = static_cast<long>(desc.rank());
  const long r1 = static_cast<long>(desc.r1);
  const long r2 = static_cast<long>(desc.r2);
  const long d1 = desc.f1.degree();
  const long d2 = desc.f2.degree();
  HilbertParams p;
  p.rank = r;
  p.alpha = make_rational(r1, r) + desc.sx;
  p.beta = make_rational(d1 + d2 + r, r) + desc.sy;
  p.gamma = make_rational(d2 * r1 - d1 * r2, r * r);
  if (desc.axis_swapped) std::swap(p.alpha, p.beta);
  return p;
}

std::string region_name(Region r) {
  switch (r) {
    case Region::H0R: return "H0R";
    case Region::H1R: return "H1R";
    case Region::H2R: return "H2R";
    case Region::boundary: return "boundary";
  }
  return "boundary";
}

Region parse_region(const std::string& s) {
  if (s == "H0R") return Region::H0R;
  if (s == "H1R") return Region::H1R;
  if (s == "H2R") return Region::H2R;
  if (s == "boundary") return Region::boundary;
  throw ParseError("unknown region label '" + s + "'");
}

Region region_of(const HilbertParams& p, long n, long m) {
  const Rational v = p.scaled_value(n, m);
  if (v < 0) return Region::H1R;
  if (v == 0) return Region::boundary;
  // Positive chi forces n + alpha and m + beta to share a sign since gamma > 0.
  return Rational(n) + p.alpha > 0 ? Region::H0R : Region::H2R;
}

CohomologyTable cohomology_table(const ConstantBundleDesc& desc, const TableWindow& window) {
  const HilbertParams params = hilbert_params(desc);
  CohomologyTable t;
  t.window = window;
  std::map<long, SplittingType> column;
  for (long n = window.n_lo; n <= window.n_hi; ++n)
    for (long m = window.m_lo; m <= window.m_hi; ++m) {
      const auto [ni, mi] = desc.to_internal(n, m);
      auto it = column.find(ni);
      if (it == column.end()) it = column.emplace(ni, pushforward_type(desc, ni)).first;
      const CurveCohomology h = h_split(it->second, mi);
      CellCohomology c;
      if (ni >= 0) {
        c.h0 = h.h0;
        c.h1 = h.h1;
      } else {
        c.h1 = h.h0;
        c.h2 = h.h1;
      }
      c.chi = chi_Q(desc, n, m);
      c.region = region_of(params, n, m);
      t.cells.emplace(std::make_pair(n, m), c);
    }
  return t;
}

NaturalityReport check_natural(const CohomologyTable& table, const HilbertParams& params) {
  NaturalityReport rep;
  auto fail = [&](long n, long m, std::string why) {
    rep.pass = false;
    rep.violations.push_back({n, m, std::move(why)});
  };
  for (const auto& [key, c] : table.cells) {
    const auto [n, m] = key;
    const Rational expected = params.scaled_value(n, m);
    if (!is_integral(expected) || Rational(c.chi) != expected)
      fail(n, m, "chi " + std::to_string(c.chi) + " != r*p = " + to_string(expected));
    if (c.h0 - c.h1 + c.h2 != c.chi) fail(n, m, "h0 - h1 + h2 != chi");
    const Region want = region_of(params, n, m);
    if (c.region != want) fail(n, m, "region " + region_name(c.region) + " != " + region_name(want));
    const int nonzero = (c.h0 != 0) + (c.h1 != 0) + (c.h2 != 0);
    if (nonzero > 1) {
      fail(n, m, "cohomology in more than one degree");
      continue;
    }
    const long mag = c.chi < 0 ? -c.chi : c.chi;
    const long h = want == Region::H0R ? c.h0 : want == Region::H1R ? c.h1 : want == Region::H2R ? c.h2 : 0;
    if (h != mag || (want == Region::boundary && nonzero != 0))
      fail(n, m, "expected only h in region " + region_name(want) + " equal to |chi| = " +
                     std::to_string(mag));
  }
  return rep;
}

std::string format_table_text(const CohomologyTable& t) {
  // One line per m (descending), cells "h0/h1/h2" in increasing n.
  std::ostringstream os;
  os << "m\\n";
  for (long n = t.window.n_lo; n <= t.window.n_hi; ++n) os << '\t' << n;
  os << '\n';
  for (long m = t.window.m_hi; m >= t.window.m_lo; --m) {
    os << m;
    for (long n = t.window.n_lo; n <= t.window.n_hi; ++n) {
      const CellCohomology& c = t.at(n, m);
      os << '\t' << c.h0 << '/' << c.h1 << '/' << c.h2;
    }
    os << '\n';
  }
  return os.str();
}

std::string format_table_csv(const CohomologyTable& t) {
  std::ostringstream os;
  os << "n,m,h0,h1,h2,chi,region\n";
  for (const auto& [key, c] : t.cells)
    os << key.first << ',' << key.second << ',' << c.h0 << ',' << c.h1 << ',' << c.h2 << ','
       << c.chi << ',' << region_name(c.region) << '\n';
  return os.str();
}

}  // namespace natbundle
