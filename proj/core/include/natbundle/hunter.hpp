#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "natbundle/ext1.hpp"
#include "natbundle/qbundle.hpp"

namespace natbundle {

struct HuntRequest {
  HilbertParams params;
  std::uint64_t seed = 0;
  long coeff_bound = 10;
  long max_resamples = 20;
  long verify_window = 6;
};

/// Parameters moved into the form alpha in (0,1) by an axis swap and a shift.
struct NormalizedParams {
  bool swapped = false;
  long shift = 0;
  Rational alpha;
  Rational beta;
  Rational gamma;
  long rank = 0;
};

/// Throws InvalidRequest (rank < 2, gamma <= 0, r*p not integral) or
/// UnsupportedCase (alpha and beta both integral).
NormalizedParams normalize_params(const HilbertParams& p);

struct DegreeSolution {
  long r1 = 0;
  long r2 = 0;
  long d1 = 0;
  long d2 = 0;
  friend bool operator==(const DegreeSolution&, const DegreeSolution&) = default;
};

/// Ranks and degrees of F1, F2 realizing the normalized parameters.
DegreeSolution solve_degrees(const Rational& alpha, const Rational& beta, const Rational& gamma, long r);

struct FiberData {
  SplittingType f;
  SplittingType f1;
  SplittingType f2;
};

FiberData build_bundles(const DegreeSolution& s);

/// Uniform integer in [-bound, bound], identical on every platform.
long uniform_coefficient(std::mt19937_64& rng, long bound);

/// Fresh eta with every normal-form coefficient drawn uniformly from
/// [-bound, bound]: eta0 then eta1, entries row-major, exponents ascending.
BigradedEta sample_eta(const SplittingType& f1, const SplittingType& f2, long bound, std::mt19937_64& rng);

struct GenericityReport {
  bool pass = false;
  std::vector<TwistRank> plus_one;   // c(1, m)
  std::vector<TwistRank> minus_two;  // c(-2, m)
  /// First rank defect, empty when pass.
  std::string defect;
};

GenericityReport genericity_check(const ConstantBundleDesc& desc);

struct TableDigest {
  TableWindow window;
  long cells = 0;
  long h0_sum = 0;
  long h1_sum = 0;
  long h2_sum = 0;
  long h0r = 0;
  long h1r = 0;
  long h2r = 0;
  long boundary = 0;
  std::string fingerprint;  // FNV-1a of the CSV rendering
  friend bool operator==(const TableDigest&, const TableDigest&) = default;
};

TableDigest digest_table(const CohomologyTable& t);

struct Certificate {
  HuntRequest request;
  ConstantBundleDesc desc;
  GenericityReport genericity;
  TableDigest table_digest;
  std::uint64_t seed_used = 0;
  long resample_count = 0;
};

/// Draws eta until it passes genericity_check and the table on the verify
/// window is natural. Each rejected draw counts as one resample.
Certificate hunt(const HuntRequest& req);

struct VerificationReport {
  bool pass = true;
  std::string stage;  // first failing stage
  std::vector<std::string> failures;
};

VerificationReport verify_certificate(const Certificate& cert, long window, bool use_oracle);

}  // namespace natbundle
