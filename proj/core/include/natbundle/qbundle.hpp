#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "natbundle/ext1.hpp"
#include "natbundle/laurent.hpp"
#include "natbundle/p1.hpp"
#include "natbundle/rational.hpp"

namespace natbundle {

/// chi(E(x,y)) / rank = (x + alpha)(y + beta) - gamma.
struct HilbertParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  long rank = 0;

  /// rank * p(x,y) has integer coefficients.
  bool integral() const;
  /// rank * p(x,y) evaluated exactly.
  Rational scaled_value(long x, long y) const;
  friend bool operator==(const HilbertParams&, const HilbertParams&) = default;
};

/// eta = eta0 (x) z0 + eta1 (x) z1, both cocycles in the base variable w.
struct BigradedEta {
  ExtCocycle eta0;
  ExtCocycle eta1;
};

/// Constant bundle E(F, F1, F2, eta) with fiber type F = O^r1 + O(-1)^r2.
///
/// Internal coordinates: the first factor is the fiber, the second the base
/// (variable w). The bundle offered to callers is E(n + sx, m + sy) with the two
/// factors exchanged first when axis_swapped is set.
struct ConstantBundleDesc {
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  SplittingType f1;
  SplittingType f2;
  BigradedEta eta;
  long sx = 0;
  long sy = 0;
  bool axis_swapped = false;

  std::size_t rank() const { return r1 + r2; }
  SplittingType fiber_type() const;
  /// Caller twist (n, m) in internal coordinates.
  std::pair<long, long> to_internal(long n, long m) const;
};

/// Checks shapes and normalizes both cocycles.
ConstantBundleDesc make_desc(std::size_t r1, std::size_t r2, SplittingType f1, SplittingType f2,
                             BigradedEta eta, long sx = 0, long sy = 0, bool axis_swapped = false);

/// A w-family of automorphisms of O^r1 + O(-1)^r2:
///
///     [ A   B0 z0 + B1 z1 ]
///     [ 0   D             ]
struct FiberAutomorphism {
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  LaurentMatrix a;   // r1 x r1
  LaurentMatrix b0;  // r1 x r2
  LaurentMatrix b1;  // r1 x r2
  LaurentMatrix d;   // r2 x r2

  friend FiberAutomorphism operator*(const FiberAutomorphism& x, const FiberAutomorphism& y);
  friend bool operator==(const FiberAutomorphism&, const FiberAutomorphism&) = default;
};

/// Transition datum lambda(w) of the bundle.
FiberAutomorphism assemble_lambda(const ConstantBundleDesc& desc);
std::string pretty(const FiberAutomorphism& g);

/// Action on H0(F(n)) for n >= 0 or on H1(F(n)) for n <= -1. Basis is copy-major:
/// all copies of the O^r1 part (monomial by monomial) come first, then the
/// copies of the O(-1)^r2 part.
LaurentMatrix gamma_action(const FiberAutomorphism& g, long n);
LaurentMatrix gamma_action(const ConstantBundleDesc& desc, long n);

/// Splitting type of q_*E(n,0) (n >= 0) or R^1 q_*E(n,0) (n <= -1), internal n,
/// from the transition matrix.
SplittingType pushforward_splitting(const ConstantBundleDesc& desc, long n);

/// The same bundle as a class in Ext^1(F2^|n|, F1^|n+1|), read off gamma_action.
ExtCocycle pushforward_cocycle(const ConstantBundleDesc& desc, long n);

/// Splitting type of the pushforward via the long exact sequence.
SplittingType pushforward_type(const ConstantBundleDesc& desc, long n);

/// chi(E(x,y)) in caller coordinates.
long chi_Q(const ConstantBundleDesc& desc, long x, long y);

HilbertParams hilbert_params(const ConstantBundleDesc& desc);

enum class Region { H0R, H1R, H2R, boundary };
std::string region_name(Region r);
Region parse_region(const std::string& s);
Region region_of(const HilbertParams& p, long n, long m);

struct CellCohomology {
  long h0 = 0;
  long h1 = 0;
  long h2 = 0;
  long chi = 0;
  Region region = Region::boundary;
  friend bool operator==(const CellCohomology&, const CellCohomology&) = default;
};

struct TableWindow {
  long n_lo = 0;
  long n_hi = -1;
  long m_lo = 0;
  long m_hi = -1;
  static TableWindow square(long w) { return {-w, w, -w, w}; }
  friend bool operator==(const TableWindow&, const TableWindow&) = default;
};

struct CohomologyTable {
  TableWindow window;
  std::map<std::pair<long, long>, CellCohomology> cells;

  const CellCohomology& at(long n, long m) const { return cells.at({n, m}); }
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// Exact table in caller coordinates, one pushforward per column.
CohomologyTable cohomology_table(const ConstantBundleDesc& desc, const TableWindow& window);

struct CellViolation {
  long n = 0;
  long m = 0;
  std::string reason;
};

struct NaturalityReport {
  bool pass = true;
  std::vector<CellViolation> violations;
};

NaturalityReport check_natural(const CohomologyTable& table, const HilbertParams& params);

struct Cohomology3 {
  long h0 = 0;
  long h1 = 0;
  long h2 = 0;
  friend bool operator==(const Cohomology3&, const Cohomology3&) = default;
};

/// Independent oracle: sections solved on the four-chart cover, h2 through the
/// dual bundle, h1 from chi. Caller coordinates.
Cohomology3 cech_oracle_h(const ConstantBundleDesc& desc, long n, long m);

std::string format_table_text(const CohomologyTable& t);
std::string format_table_csv(const CohomologyTable& t);

}  // namespace natbundle
