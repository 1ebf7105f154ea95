#include "natbundle/hunter.hpp"

#include <cstdio>
#include <limits>
#include <optional>

#include "natbundle/errors.hpp"

namespace natbundle {

NormalizedParams normalize_params(const HilbertParams& p) {
  if (p.rank < 2) throw InvalidRequest("rank must be at least 2, got " + std::to_string(p.rank));
  if (p.gamma <= 0) throw InvalidRequest("gamma must be positive, got " + to_string(p.gamma));
  if (!p.integral())
    throw InvalidRequest("rank * p(x,y) must have integer coefficients for rank " + std::to_string(p.rank));
  const bool ai = is_integral(p.alpha);
  const bool bi = is_integral(p.beta);
  if (ai && bi)
    throw UnsupportedCase("alpha and beta are both integral; no construction is known for this case");
  NormalizedParams n;
  n.swapped = ai;
  const Rational a = n.swapped ? p.beta : p.alpha;
  n.beta = n.swapped ? p.alpha : p.beta;
  n.shift = floor_to_long(a);
  n.alpha = a - n.shift;
  n.gamma = p.gamma;
  n.rank = p.rank;
  return n;
}

DegreeSolution solve_degrees(const Rational& alpha, const Rational& beta, const Rational& gamma, long r) {
  if (alpha <= 0 || alpha >= 1) throw InvalidRequest("alpha must lie in (0,1), got " + to_string(alpha));
  const Rational rr = r;
  const Rational r1 = rr * alpha;
  const Rational r2 = rr - r1;
  DegreeSolution s;
  s.r1 = to_long(r1);
  s.r2 = to_long(r2);
  s.d1 = to_long(r1 * beta - rr * gamma - r1);
  s.d2 = to_long(r2 * beta + rr * gamma - r2);
  return s;
}

FiberData build_bundles(const DegreeSolution& s) {
  std::vector<int> f(static_cast<std::size_t>(s.r1), 0);
  f.insert(f.end(), static_cast<std::size_t>(s.r2), -1);
  return FiberData{SplittingType(std::move(f)), natural_type(static_cast<std::size_t>(s.r1), s.d1),
                   natural_type(static_cast<std::size_t>(s.r2), s.d2)};
}

long uniform_coefficient(std::mt19937_64& rng, long bound) {
  if (bound <= 0) return 0;
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / range * range;
  std::uint64_t u = rng();
  while (u >= limit) u = rng();
  return static_cast<long>(u % range) - bound;
}

BigradedEta sample_eta(const SplittingType& f1, const SplittingType& f2, long bound, std::mt19937_64& rng) {
  auto draw = [&] {
    LaurentMatrix e(Var::w, f1.rank(), f2.rank());
    for (std::size_t i = 0; i < f1.rank(); ++i)
      for (std::size_t j = 0; j < f2.rank(); ++j) {
        const auto [lo, hi] = cocycle_band(f1.components()[i], f2.components()[j]);
        for (int k = lo; k <= hi; ++k) e(i, j).add_term(k, uniform_coefficient(rng, bound));
      }
    return make_cocycle(f1.components(), f2.components(), std::move(e));
  };
  ExtCocycle e0 = draw();
  ExtCocycle e1 = draw();
  return BigradedEta{std::move(e0), std::move(e1)};
}

GenericityReport genericity_check(const ConstantBundleDesc& desc) {
  GenericityReport rep;
  rep.plus_one = connecting_ranks(pushforward_cocycle(desc, 1));
  rep.minus_two = connecting_ranks(pushforward_cocycle(desc, -2));
  rep.pass = true;
  auto scan = [&](const std::vector<TwistRank>& ranks, long n) {
    for (const TwistRank& t : ranks)
      if (!t.maximal() && rep.pass) {
        rep.pass = false;
        rep.defect = "c(" + std::to_string(n) + "," + std::to_string(t.m) + ") has rank " +
                     std::to_string(t.rank) + " on a " + std::to_string(t.rows) + "x" +
                     std::to_string(t.cols) + " matrix";
      }
  };
  scan(rep.plus_one, 1);
  scan(rep.minus_two, -2);
  return rep;
}

TableDigest digest_table(const CohomologyTable& t) {
  TableDigest d;
  d.window = t.window;
  for (const auto& [key, c] : t.cells) {
    ++d.cells;
    d.h0_sum += c.h0;
    d.h1_sum += c.h1;
    d.h2_sum += c.h2;
    switch (c.region) {
      case Region::H0R: ++d.h0r; break;
      case Region::H1R: ++d.h1r; break;
      case Region::H2R: ++d.h2r; break;
      case Region::boundary: ++d.boundary; break;
    }
  }
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : format_table_csv(t)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  d.fingerprint = buf;
  return d;
}

Certificate hunt(const HuntRequest& req) {
  if (req.coeff_bound < 1) throw InvalidRequest("coefficient bound must be positive");
  if (req.max_resamples < 0 || req.verify_window < 0)
    throw InvalidRequest("resample count and window must be non-negative");
  const NormalizedParams np = normalize_params(req.params);
  const DegreeSolution deg = solve_degrees(np.alpha, np.beta, np.gamma, np.rank);
  const FiberData fd = build_bundles(deg);

  std::mt19937_64 rng(req.seed);
  Certificate cert;
  cert.request = req;
  cert.seed_used = req.seed;
  // Maximal rank at n = 1 and n = -2 does not force it at every n, so a draw
  // is only accepted once the whole window is natural.
  std::optional<CohomologyTable> table;
  for (long attempt = 0;; ++attempt) {
    BigradedEta eta = sample_eta(fd.f1, fd.f2, req.coeff_bound, rng);
    ConstantBundleDesc desc = make_desc(static_cast<std::size_t>(deg.r1), static_cast<std::size_t>(deg.r2),
                                        fd.f1, fd.f2, std::move(eta), np.shift, 0, np.swapped);
    GenericityReport g = genericity_check(desc);
    std::string defect = g.defect;
    if (g.pass) {
      if (!(hilbert_params(desc) == req.params))
        throw VerificationFailed("constructed bundle has the wrong Hilbert polynomial");
      CohomologyTable t = cohomology_table(desc, TableWindow::square(req.verify_window));
      const NaturalityReport nat = check_natural(t, req.params);
      if (nat.pass) {
        cert.desc = std::move(desc);
        cert.genericity = std::move(g);
        cert.resample_count = attempt;
        table = std::move(t);
        break;
      }
      const CellViolation& v = nat.violations.front();
      defect = "cell (" + std::to_string(v.n) + "," + std::to_string(v.m) + "): " + v.reason;
    }
    if (attempt >= req.max_resamples)
      throw GenericityExhausted("no generic extension data after " + std::to_string(attempt + 1) +
                                " draws; last defect: " + defect);
  }
  cert.table_digest = digest_table(*table);
  return cert;
}

VerificationReport verify_certificate(const Certificate& cert, long window, bool use_oracle) {
  VerificationReport rep;
  auto fail = [&](const std::string& stage, const std::string& what) {
    if (rep.pass) rep.stage = stage;
    rep.pass = false;
    rep.failures.push_back(stage + ": " + what);
  };
  const ConstantBundleDesc& desc = cert.desc;
  const HilbertParams params = hilbert_params(desc);
  if (!(params == cert.request.params))
    fail("params", "descriptor has alpha=" + to_string(params.alpha) + " beta=" + to_string(params.beta) +
                       " gamma=" + to_string(params.gamma) + " rank=" + std::to_string(params.rank));

  const GenericityReport g = genericity_check(desc);
  if (!g.pass) fail("genericity", g.defect);
  if (g.plus_one != cert.genericity.plus_one || g.minus_two != cert.genericity.minus_two)
    fail("genericity", "recorded connecting-map ranks differ from recomputed ones");

  const TableWindow win = TableWindow::square(window);
  const CohomologyTable table = cohomology_table(desc, win);
  const NaturalityReport nat = check_natural(table, cert.request.params);
  for (const CellViolation& v : nat.violations)
    fail("table", "cell (" + std::to_string(v.n) + "," + std::to_string(v.m) + "): " + v.reason);
  if (window == cert.request.verify_window && !(digest_table(table) == cert.table_digest))
    fail("digest", "table digest does not match the recorded one");

  if (use_oracle)
    for (const auto& [key, c] : table.cells) {
      const auto [n, m] = key;
      try {
        const Cohomology3 o = cech_oracle_h(desc, n, m);
        if (o.h0 != c.h0 || o.h1 != c.h1 || o.h2 != c.h2)
          fail("oracle", "cell (" + std::to_string(n) + "," + std::to_string(m) + "): oracle " +
                             std::to_string(o.h0) + "/" + std::to_string(o.h1) + "/" + std::to_string(o.h2) +
                             " vs table " + std::to_string(c.h0) + "/" + std::to_string(c.h1) + "/" +
                             std::to_string(c.h2));
      } catch (const OracleInconclusive& e) {
        fail("oracle", e.what());
      }
    }
  return rep;
}

}  // namespace natbundle
