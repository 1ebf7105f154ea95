#include <doctest.h>

#include "builders.hpp"
#include "natbundle/errors.hpp"
#include "natbundle/p1.hpp"

using namespace natbundle;
using nbtest::poly;

namespace {

H0Profile profile_of(const SplittingType& s) {
  return [s](long m) { return h_split(s, m).h0; };
}

}  // namespace

TEST_SUITE("p1") {
  TEST_CASE("h_line examples") {
    CHECK(h_line(0) == CurveCohomology{1, 0});
    CHECK(h_line(-1) == CurveCohomology{0, 0});
    CHECK(h_line(-4) == CurveCohomology{0, 3});
  }

  TEST_CASE("h_split examples") {
    CHECK(h_split(SplittingType({0, -1}), 0) == CurveCohomology{1, 0});
    CHECK(h_split(SplittingType({-7}), 5) == CurveCohomology{0, 1});
    CHECK(h_split(SplittingType({2, 2}), -1) == CurveCohomology{4, 0});
  }

  TEST_CASE("splitting types are kept sorted") {
    const SplittingType s({-7, 2, 2});
    CHECK(s.components() == std::vector<int>{2, 2, -7});
    CHECK(s.str() == "[2,2,-7]");
    CHECK(s.degree() == -3);
    CHECK(s.dual().str() == "[7,-2,-2]");
    CHECK(merge(SplittingType({0}), SplittingType({-4})).str() == "[0,-4]");
  }

  TEST_CASE("natural_type examples") {
    CHECK(natural_type(2, -10).str() == "[-5,-5]");
    CHECK(natural_type(4, -10).str() == "[-2,-2,-3,-3]");
    CHECK(natural_type(1, -7).str() == "[-7]");
    CHECK(natural_type(2, 4).str() == "[2,2]");
    CHECK(natural_type(3, -2).str() == "[0,-1,-1]");
    CHECK(natural_type(0, 0).rank() == 0);
    CHECK_THROWS_AS(natural_type(0, 3), InvalidRequest);
  }

  TEST_CASE("natural_type agrees with a brute-force search") {
    for (std::size_t r = 1; r <= 6; ++r)
      for (long d = -20; d <= 20; ++d) {
        const SplittingType s = natural_type(r, d);
        CHECK(s.rank() == r);
        CHECK(s.degree() == d);
        CHECK(s.components().front() - s.components().back() <= 1);
        // Natural cohomology: never both h0 and h1 at any twist.
        for (long m = -12; m <= 12; ++m) {
          const auto h = h_split(s, m);
          CHECK((h.h0 == 0 || h.h1 == 0));
        }
      }
  }

  TEST_CASE("splitting_from_h0_profile examples") {
    CHECK(splitting_from_h0_profile(profile_of(SplittingType({-2, -2})), 2, -4).str() == "[-2,-2]");
    const H0Profile p = [](long m) { return std::max(m + 1, 0L) + std::max(m - 1, 0L); };
    CHECK(splitting_from_h0_profile(p, 2, -2).str() == "[0,-2]");
  }

  TEST_CASE("profile round trip on random types") {
    nbtest::Rng rng(3);
    for (int t = 0; t < 200; ++t) {
      const SplittingType s(nbtest::random_components(rng, static_cast<std::size_t>(nbtest::draw(rng, 0, 6)), -30, 30));
      CHECK(splitting_from_h0_profile(profile_of(s), s.rank(), s.degree()) == s);
    }
  }

  TEST_CASE("inconsistent profiles are rejected") {
    CHECK_THROWS_AS(splitting_from_h0_profile(profile_of(SplittingType({1, 0})), 1, 1), ProfileError);
    CHECK_THROWS_AS(splitting_from_h0_profile(profile_of(SplittingType({1, 0})), 2, 0), ProfileError);
    const H0Profile bad = [](long m) { return m >= 0 ? 1L : 0L; };
    CHECK_THROWS_AS(splitting_from_h0_profile(bad, 1, 0), ProfileError);
  }

  TEST_CASE("Riemann-Roch and Serre duality on random types") {
    nbtest::Rng rng(4);
    for (int t = 0; t < 100; ++t) {
      const SplittingType s(nbtest::random_components(rng, static_cast<std::size_t>(nbtest::draw(rng, 1, 5)), -9, 9));
      for (long m = -12; m <= 12; ++m) {
        const auto h = h_split(s, m);
        CHECK(h.h0 - h.h1 == s.degree() + static_cast<long>(s.rank()) * (m + 1));
        CHECK(h.h1 == h_split(s.dual(), -m - 2).h0);
      }
    }
  }

  TEST_CASE("h0_from_transition examples") {
    for (int n = 0; n <= 5; ++n)
      CHECK(h0_from_transition(LaurentMatrix::diagonal_monomials(Var::z, {-n}), 0) == n + 1);
    CHECK(h0_from_transition(LaurentMatrix::identity(Var::z, 2), 0) == 2);
    LaurentMatrix g(Var::z, 2, 2);
    g(0, 0) = poly(Var::z, {{4, 1}});
    g(0, 1) = poly(Var::z, {{1, 1}});
    g(1, 1) = poly(Var::z, {{0, 1}});
    CHECK(h0_from_transition(g, 1) == 1);
    LaurentMatrix bad(Var::z, 1, 1);
    bad(0, 0) = poly(Var::z, {{0, 1}, {1, 1}});
    CHECK_THROWS_AS(h0_from_transition(bad, 0), NotABundleError);
  }

  TEST_CASE("splitting_from_transition examples") {
    CHECK(splitting_from_transition(LaurentMatrix::diagonal_monomials(Var::z, {7, -2, -2})).str() == "[2,2,-7]");
    CHECK(splitting_from_transition(LaurentMatrix::identity(Var::z, 3)).str() == "[0,0,0]");
    LaurentMatrix g(Var::z, 2, 2);
    g(0, 0) = poly(Var::z, {{4, 1}});
    g(0, 1) = poly(Var::z, {{2, 1}});
    g(1, 1) = poly(Var::z, {{0, 1}});
    CHECK(splitting_from_transition(g).str() == "[-2,-2]");
    CHECK(splitting_from_transition_profile(g).str() == "[-2,-2]");
  }

  TEST_CASE("splitting type is invariant under unimodular changes of chart") {
    nbtest::Rng rng(8);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = static_cast<std::size_t>(nbtest::draw(rng, 1, 4));
      const SplittingType s(nbtest::random_components(rng, n, -5, 5));
      std::vector<int> ex;
      for (int c : s.components()) ex.push_back(-c);
      const LaurentMatrix d = LaurentMatrix::diagonal_monomials(Var::z, ex);
      const LaurentMatrix g =
          nbtest::random_unimodular(rng, Var::z, n, false) * d * nbtest::random_unimodular(rng, Var::z, n, true);
      CHECK(splitting_from_transition(g) == s);
      CHECK(splitting_from_transition_profile(g) == s);
    }
  }

  TEST_CASE("block diagonal transitions merge") {
    nbtest::Rng rng(9);
    for (int t = 0; t < 20; ++t) {
      auto random_bundle = [&](std::size_t n) {
        std::vector<int> ex = nbtest::random_components(rng, n, -4, 4);
        return nbtest::random_unimodular(rng, Var::z, n, false) * LaurentMatrix::diagonal_monomials(Var::z, ex) *
               nbtest::random_unimodular(rng, Var::z, n, true);
      };
      const LaurentMatrix a = random_bundle(2);
      const LaurentMatrix b = random_bundle(3);
      CHECK(splitting_from_transition(block_diagonal(a, b)) ==
            merge(splitting_from_transition(a), splitting_from_transition(b)));
    }
  }
}
