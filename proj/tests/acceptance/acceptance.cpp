// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   natbundle_acceptance [--only N,N,...] [--battery-limit K] [--cli PATH]
//
// --battery-limit runs only the first K battery instances (for quick local
// runs); the criterion is then reported as PARTIAL and counts as a failure.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sys/wait.h>
#include <sstream>
#include <string>
#include <vector>

#include "builders.hpp"
#include "natbundle/errors.hpp"
#include "natbundle/hunter.hpp"
#include "natbundle/rat_matrix.hpp"

using namespace natbundle;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  bool partial = false;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ExtCocycle cubic(long a, long b, long c) {
  LaurentMatrix e(Var::z, 1, 1);
  e(0, 0) = nbtest::poly(Var::z, {{1, a}, {2, b}, {3, c}});
  return make_cocycle({-4}, {0}, e);
}

std::string expected_cubic_type(long a, long b, long c) {
  if (a == 0 && b == 0 && c == 0) return "[0,-4]";
  return a * c - b * b != 0 ? "[-2,-2]" : "[-1,-3]";
}

Outcome trichotomy() {
  Outcome out;
  std::set<std::string> seen;
  auto check = [&](long a, long b, long c) {
    seen.insert(expected_cubic_type(a, b, c));
    const std::string got = splitting_of_extension(cubic(a, b, c)).str();
    const std::string want = expected_cubic_type(a, b, c);
    if (got != want) {
      std::ostringstream s;
      s << "(" << a << "," << b << "," << c << ") gave " << got << ", expected " << want;
      out.fail(s.str());
    }
  };
  check(0, 0, 0);
  check(1, 0, 0);
  check(0, 1, 0);
  nbtest::Rng rng(1001);
  for (int t = 0; t < 150; ++t) {
    long a, b, c;
    if (t % 3 == 0) {
      // Rank-one points a c = b^2 off the zero class.
      const long s = nbtest::draw(rng, 1, 4) * (nbtest::draw(rng, 0, 1) ? 1 : -1);
      const long u = nbtest::draw(rng, -3, 3);
      const long v = u == 0 ? nbtest::draw(rng, 1, 3) : nbtest::draw(rng, -3, 3);
      a = s * u * u;
      b = s * u * v;
      c = s * v * v;
    } else {
      a = nbtest::draw(rng, -6, 6);
      b = nbtest::draw(rng, -6, 6);
      c = nbtest::draw(rng, -6, 6);
    }
    check(a, b, c);
  }
  out.detail = out.pass ? "153 classes, " + std::to_string(seen.size()) + " branches hit" : out.detail;
  return out;
}

Outcome example_reproduction() {
  Outcome out;
  HuntRequest q;
  q.params = HilbertParams{make_rational(1, 3), 0, 2, 3};
  const Certificate c = hunt(q);
  const ConstantBundleDesc& d = c.desc;
  if (d.r1 != 1 || d.r2 != 2) out.fail("ranks " + std::to_string(d.r1) + "," + std::to_string(d.r2));
  if (d.f1.degree() != -7 || d.f2.degree() != 4) out.fail("degrees differ");
  if (d.fiber_type().str() != "[0,-1,-1]") out.fail("F = " + d.fiber_type().str());
  if (d.f1.str() != "[-7]") out.fail("F1 = " + d.f1.str());
  if (d.f2.str() != "[2,2]") out.fail("F2 = " + d.f2.str());
  const std::vector<std::pair<long, std::vector<int>>> shapes = {{-1, {-2, -2}}, {0, {7}}, {1, {7, 7, -2, -2}}};
  for (const auto& [n, diag] : shapes) {
    const LaurentMatrix g = gamma_action(d, n);
    if (g.rows() != diag.size()) {
      out.fail("gamma_action(" + std::to_string(n) + ") has size " + std::to_string(g.rows()));
      continue;
    }
    for (std::size_t i = 0; i < diag.size(); ++i) {
      const LaurentPoly& p = g(i, i);
      if (p.size() != 1 || p.min_exponent() != diag[i] || p.coeff(diag[i]) != 1)
        out.fail("diagonal entry " + std::to_string(i) + " of gamma_action(" + std::to_string(n) + ")");
      for (std::size_t j = 0; j < i; ++j)
        if (!g(i, j).is_zero()) out.fail("gamma_action(" + std::to_string(n) + ") is not upper triangular");
    }
  }
  if (out.pass) out.detail = "F1=[-7] F2=[2,2], sizes 2/1/4";
  return out;
}

struct BatteryInstance {
  Rational alpha, beta, gamma;
  long rank;
};

std::vector<Rational> rationals(long max_abs_num, bool positive, const Rational& max) {
  std::set<Rational> s;
  for (long q = 1; q <= 4; ++q)
    for (long p = positive ? 1 : -max_abs_num; p <= max_abs_num; ++p) {
      const Rational x = make_rational(p, q);
      if (abs(x) <= max) s.insert(x);
    }
  return {s.begin(), s.end()};
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::vector<BatteryInstance> battery_instances() {
  const std::vector<Rational> ab = rationals(12, false, 3);
  const std::vector<Rational> gammas = rationals(12, true, 3);
  std::vector<BatteryInstance> out;
  for (long r = 2; r <= 8; ++r)
    for (const Rational& a : ab)
      for (const Rational& b : ab) {
        if (is_integer(a) && is_integer(b)) continue;
        if (!is_integer(r * a) || !is_integer(r * b)) continue;
        for (const Rational& g : gammas)
          if (is_integer(r * (a * b - g))) out.push_back({a, b, g, r});
      }
  return out;
}

Outcome battery(long limit) {
  Outcome out;
  const std::vector<BatteryInstance> all = battery_instances();
  const std::size_t n = limit >= 0 ? std::min<std::size_t>(all.size(), static_cast<std::size_t>(limit)) : all.size();
  double worst = 0;
  std::string worst_name;
  long max_resamples_seen = 0;
  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < n; ++i) {
    const BatteryInstance& b = all[i];
    std::ostringstream name;
    name << "(" << b.alpha << "," << b.beta << "," << b.gamma << "," << b.rank << ")";
    HuntRequest q;
    q.params = HilbertParams{b.alpha, b.beta, b.gamma, b.rank};
    q.seed = i;
    const auto ti = Clock::now();
    try {
      const Certificate c = hunt(q);
      max_resamples_seen = std::max(max_resamples_seen, c.resample_count);
      // Independent recheck of the certified window.
      const CohomologyTable t = cohomology_table(c.desc, TableWindow::square(6));
      const NaturalityReport rep = check_natural(t, q.params);
      if (!rep.pass) out.fail(name.str() + ": table not natural at (" + std::to_string(rep.violations[0].n) + "," +
                              std::to_string(rep.violations[0].m) + ")");
      for (const auto& [key, cell] : t.cells) {
        const Rational want = q.params.scaled_value(key.first, key.second);
        if (Rational(cell.chi) != want || cell.h0 - cell.h1 + cell.h2 != cell.chi) {
          out.fail(name.str() + ": chi mismatch");
          break;
        }
      }
    } catch (const std::exception& e) {
      out.fail(name.str() + ": " + e.what());
    }
    const double dt = seconds_since(ti);
    if (dt > worst) {
      worst = dt;
      worst_name = name.str();
    }
    if (dt > 60) out.fail(name.str() + " took " + std::to_string(dt) + " s");
  }
  const double total = seconds_since(t0);
  if (total > 1800) out.fail("battery took " + std::to_string(total) + " s");
  std::ostringstream s;
  s << n << "/" << all.size() << " instances, max resamples " << max_resamples_seen << ", slowest " << worst_name
    << " " << worst << " s";
  if (out.pass) out.detail = s.str();
  else out.detail += "; " + s.str();
  if (n < all.size()) {
    out.partial = true;
    out.pass = false;
  }
  return out;
}

Outcome dual_path() {
  Outcome out;
  nbtest::Rng rng(4004);
  for (int t = 0; t < 25; ++t) {
    const ConstantBundleDesc d = nbtest::random_desc(rng, 5, 10);
    for (long n = -5; n <= 5; ++n) {
      if (n == 0 || n == -1) continue;
      const SplittingType a = splitting_of_extension(pushforward_cocycle(d, n));
      const SplittingType b = pushforward_splitting(d, n);
      if (!(a == b)) out.fail("desc " + std::to_string(t) + ", n=" + std::to_string(n) + ": " + a.str() + " vs " + b.str());
    }
  }
  if (out.pass) out.detail = "25 descs x 9 twists";
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  nbtest::Rng rng(5005);
  long cells = 0;
  for (int t = 0; t < 10; ++t) {
    const ConstantBundleDesc d = nbtest::random_desc(rng, 4, 10, t % 2 == 1);
    const CohomologyTable tab = cohomology_table(d, TableWindow::square(3));
    for (const auto& [key, c] : tab.cells) {
      const Cohomology3 o = cech_oracle_h(d, key.first, key.second);
      ++cells;
      if (!(o == Cohomology3{c.h0, c.h1, c.h2}))
        out.fail("desc " + std::to_string(t) + " cell (" + std::to_string(key.first) + "," +
                 std::to_string(key.second) + ")");
    }
  }
  if (out.pass) out.detail = std::to_string(cells) + " cells";
  return out;
}

Outcome les_exactness() {
  Outcome out;
  nbtest::Rng rng(6006);
  long twists = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t s = static_cast<std::size_t>(nbtest::draw(rng, 1, 3));
    const std::size_t r = static_cast<std::size_t>(nbtest::draw(rng, 1, 3));
    const std::vector<int> sub = nbtest::random_components(rng, s, -9, -2);
    const std::vector<int> quot = nbtest::random_components(rng, r, -1, 4);
    const ExtCocycle e = nbtest::random_cocycle(rng, Var::z, sub, quot, 5, t % 4 == 0 ? 0.3 : 1.0);
    const SplittingType f1(sub), f2(quot);
    const SplittingType g = splitting_of_extension(e);
    const LaurentMatrix tr = assemble_transition(e);
    if (g.rank() != s + r || g.degree() != f1.degree() + f2.degree()) out.fail("cocycle " + std::to_string(t) + ": rank/degree");
    for (const TwistRank& k : connecting_ranks(e)) {
      ++twists;
      const auto h1 = h_split(f1, k.m);
      const auto h2 = h_split(f2, k.m);
      const auto hg = h_split(g, k.m);
      const long rk = static_cast<long>(k.rank);
      // 0 -> H0(F1) -> H0(G) -> H0(F2) -c-> H1(F1) -> H1(G) -> H1(F2) -> 0
      const bool ok = static_cast<long>(k.cols) == h2.h0 && static_cast<long>(k.rows) == h1.h1 &&
                      hg.h0 == h1.h0 + h2.h0 - rk && hg.h1 == h1.h1 - rk + h2.h1 &&
                      hg.h0 - hg.h1 == (h1.h0 - h1.h1) + (h2.h0 - h2.h1) &&
                      h0_from_transition(tr, k.m) == hg.h0;
      if (!ok) out.fail("cocycle " + std::to_string(t) + ", m=" + std::to_string(k.m));
    }
  }
  if (out.pass) out.detail = std::to_string(twists) + " twists";
  return out;
}

Outcome functoriality() {
  Outcome out;
  nbtest::Rng rng(7007);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r1 = static_cast<std::size_t>(nbtest::draw(rng, 1, 3));
    const std::size_t r2 = static_cast<std::size_t>(nbtest::draw(rng, 1, 3));
    const FiberAutomorphism g = nbtest::random_fiber_automorphism(rng, r1, r2);
    const FiberAutomorphism h = nbtest::random_fiber_automorphism(rng, r1, r2);
    for (long n = -4; n <= 4; ++n)
      if (!(gamma_action(g * h, n) == gamma_action(g, n) * gamma_action(h, n)))
        out.fail("pair " + std::to_string(t) + ", n=" + std::to_string(n));
  }
  if (out.pass) out.detail = "20 pairs x 9 twists";
  return out;
}

template <class E>
bool throws(const HilbertParams& p) {
  HuntRequest q;
  q.params = p;
  try {
    hunt(q);
  } catch (const E&) {
    return true;
  } catch (...) {
  }
  return false;
}

Outcome negative_controls(const std::string& cli) {
  Outcome out;
  const Rational half = make_rational(1, 2);
  if (!throws<InvalidRequest>({half, 0, -1, 2})) out.fail("gamma < 0 accepted");
  if (!throws<InvalidRequest>({half, 0, 0, 2})) out.fail("gamma = 0 accepted");
  if (!throws<UnsupportedCase>({0, 1, 1, 2})) out.fail("integral alpha, beta accepted");
  if (!throws<InvalidRequest>({half, half, make_rational(1, 4), 1})) out.fail("rank 1 accepted");
  if (!cli.empty()) {
    struct Case {
      const char* args;
      int code;
    };
    const Case cases[] = {{"--alpha 1/2 --beta 0 --gamma -1 --rank 2", 4},
                          {"--alpha 1/2 --beta 0 --gamma 0 --rank 2", 4},
                          {"--alpha 0 --beta 1 --gamma 1 --rank 2", 5},
                          {"--alpha 1/2 --beta 1/2 --gamma 1/4 --rank 1", 4}};
    for (const Case& c : cases) {
      const std::string cmd = "\"" + cli + "\" hunt " + c.args + " > /dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
      if (code != c.code) out.fail(std::string("cli hunt ") + c.args + " exited " + std::to_string(code));
    }
  }
  if (out.pass) out.detail = cli.empty() ? "library only" : "library and cli exit codes";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  long battery_limit = -1;
#ifdef NATBUNDLE_CLI_PATH
  std::string cli = NATBUNDLE_CLI_PATH;
#else
  std::string cli;
#endif
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');) only.insert(std::stoi(tok));
    } else if (a == "--battery-limit" && i + 1 < argc) {
      battery_limit = std::stol(argv[++i]);
    } else if (a == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else {
      std::cerr << "usage: natbundle_acceptance [--only N,...] [--battery-limit K] [--cli PATH]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "extension trichotomy", 5, trichotomy},
      {2, "worked example reproduction", 5, example_reproduction},
      {3, "natural cohomology battery", 1800, [&] { return battery(battery_limit); }},
      {4, "dual-path pushforward agreement", 120, dual_path},
      {5, "oracle agreement", 300, oracle_agreement},
      {6, "long exact sequence identities", 30, les_exactness},
      {7, "gamma functoriality", 30, functoriality},
      {8, "negative controls", 30, [&] { return negative_controls(cli); }},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    if (dt > c.limit_s) o.fail("runtime " + std::to_string(dt) + " s over the " + std::to_string(c.limit_s) + " s limit");
    all = all && o.pass;
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.partial ? "PARTIAL" : o.pass ? "PASS" : "FAIL")
              << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << dt << " s, limit " << c.limit_s << " s) " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
