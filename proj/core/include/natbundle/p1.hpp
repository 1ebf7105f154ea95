#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "natbundle/laurent.hpp"

namespace natbundle {

/// Splitting type of a bundle on P^1: the integers n_i with F = sum O(n_i),
/// kept in non-increasing order.
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> components);

  const std::vector<int>& components() const { return components_; }
  std::size_t rank() const { return components_.size(); }
  long degree() const;

  SplittingType dual() const;
  SplittingType twisted(int m) const;
  /// Components repeated `copies` times (F^copies).
  SplittingType power(std::size_t copies) const;

  /// "[2,2,-7]"
  std::string str() const;

  friend SplittingType merge(const SplittingType& a, const SplittingType& b);
  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> components_;
};

struct CurveCohomology {
  long h0 = 0;
  long h1 = 0;
  friend bool operator==(const CurveCohomology&, const CurveCohomology&) = default;
};

/// Cohomology of O(n) on P^1.
CurveCohomology h_line(long n);

/// Cohomology of F(m) for F with splitting type s.
CurveCohomology h_split(const SplittingType& s, long m);

/// The unique type O(c+1)^k + O(c)^(r-k), 0 <= k < r, of rank r and
/// degree d; these are exactly the bundles on P^1 with natural cohomology.
SplittingType natural_type(std::size_t r, long d);

bool has_natural_cohomology(const SplittingType& s);

/// m -> h0(F(m)), defined on all integers.
using H0Profile = std::function<long(long)>;

/// Recovers the splitting type from h0 of all twists by peeling off the
/// largest summand first. Throws ProfileError if no bundle of the given rank
/// and degree has this profile.
SplittingType splitting_from_h0_profile(const H0Profile& profile, std::size_t rank, long degree);

/// h0 of F_gamma(m): polynomial vectors s with gamma z^-m s free of positive
/// exponents. Throws NotABundleError when det gamma is not a unit.
long h0_from_transition(const LaurentMatrix& gamma, long m);

/// Splitting type of the bundle glued by gamma, via column reduction.
SplittingType splitting_from_transition(const LaurentMatrix& gamma);

/// Same answer through the h0 profile of h0_from_transition; slower, kept as
/// an independent route.
SplittingType splitting_from_transition_profile(const LaurentMatrix& gamma);

}  // namespace natbundle
