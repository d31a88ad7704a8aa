#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsp/equilibrium.hpp"
#include "gsp/pareto.hpp"
#include "test_util.hpp"

using namespace gsp;
using namespace gsp::testutil;

TEST_CASE("solve_s_x: t = 1/3 degenerates to s = 2, x = 0") {
  SxSolution sol = solve_s_x(Rat(1, 3));
  CHECK(sol.s == 2);
  CHECK(sol.exact);
  CHECK(sol.x == Rat(0));
}

TEST_CASE("solve_s_x: t = 2/5 hits s = 3 exactly with x = 0") {
  SxSolution sol = solve_s_x(Rat(2, 5));
  CHECK(sol.s == 3);
  CHECK(sol.exact);
  CHECK(sol.x == Rat(0));
}

TEST_CASE("solve_s_x: t = 2/7 has the rational root x = 1") {
  SxSolution sol = solve_s_x(Rat(2, 7));
  CHECK(sol.s == 2);
  CHECK(sol.exact);
  CHECK(sol.x == Rat(1));
}

TEST_CASE("solve_s_x: an irrational root is isolated, not invented") {
  SxSolution sol = solve_s_x(Rat(1, 4));
  CHECK(sol.s == 2);
  CHECK_FALSE(sol.exact);
  CHECK(sol.x_lo < sol.x_hi);
  // the quadratic changes sign across the interval
  auto quad = [&](const Rat& x) -> Rat { return sol.qa * x * x + sol.qb * x + sol.qc; };
  CHECK(sgn(quad(sol.x_lo)) < 0);
  CHECK(sgn(quad(sol.x_hi)) >= 0);
  CHECK(sol.x_hi - sol.x_lo <= Rat(1, 1000000));
  // golden-ratio root: x^2 - x - 1 = 0
  CHECK(quad(Rat(1)) < 0);
  CHECK(quad(Rat(2)) > 0);
}

TEST_CASE("solve_s_x: small x drives the bound toward zero as x grows") {
  // Fixing s = 2 the family bound is decreasing in x.
  Rat prev(1);
  for (int x = 0; x <= 50; x += 10) {
    Rat bound = tight_family_bound(2, Rat(x));
    CHECK(bound < prev);
    prev = bound;
  }
  CHECK(tight_family_bound(2, Rat(1000)) < Rat(1, 500));
}

TEST_CASE("solve_s_x rejects targets outside (0, 1/2)") {
  CHECK_THROWS_AS(solve_s_x(Rat(0)), input_error);
  CHECK_THROWS_AS(solve_s_x(Rat(1, 2)), input_error);
  CHECK_THROWS_AS(solve_s_x(Rat(-1, 3)), input_error);
}

TEST_CASE("solve_s_x honors a larger s override") {
  SxSolution sol = solve_s_x(Rat(1, 3), 4);
  CHECK(sol.s == 4);
  CHECK_THROWS_AS(solve_s_x(Rat(2, 5), 2), input_error);
}

TEST_CASE("approximate_x lands within the requested bound deviation") {
  Rat t(1, 4);
  Rat x = approximate_x(t, 2, Rat(1, 100000));
  Rat b = tight_family_bound(2, x);
  Rat err = b > t ? b - t : t - b;
  CHECK(err <= Rat(1, 100000));
}

TEST_CASE("tight_instance: structure and equilibrium at t = 1/3") {
  TightInstanceSpec spec = make_tight_spec(Rat(1, 3), Rat(1, 10000));
  TightInstance ti = tight_instance(spec);
  CHECK(ti.instance.n == 4);
  CHECK(ti.instance.m == 2);
  CHECK(ti.instance.s == 2);
  CHECK(ti.instance.discounts[0][0] == Rat(1));
  CHECK(ti.expected_limit_ratio == Rat(1, 3));

  EquilibriumReport report = verify_equilibrium(ti.instance, ti.bids);
  CHECK(report.verdict);
  for (const auto& b : report.bidders) CHECK(b.gap == Rat(0));

  WelfareSummary ws = welfare_summary(ti.instance, ti.bids);
  Rat err = ws.welfare_ratio - Rat(1, 3);
  if (sgn(err) < 0) err = -err;
  CHECK(err <= 10 * spec.eps);
}

TEST_CASE("tight_instance: ratio error shrinks by a factor >= 9 with eps/10") {
  auto ratio_error = [](const Rat& eps) {
    TightInstanceSpec spec = make_tight_spec(Rat(1, 3), eps);
    TightInstance ti = tight_instance(spec);
    Rat err = welfare_summary(ti.instance, ti.bids).welfare_ratio - Rat(1, 3);
    return sgn(err) < 0 ? Rat(-err) : err;
  };
  Rat coarse = ratio_error(Rat(1, 10000));
  Rat fine = ratio_error(Rat(1, 100000));
  CHECK(coarse >= 9 * fine);
}

TEST_CASE("tight_instance: generated discounts reproduce the target bound") {
  TightInstanceSpec spec = make_tight_spec(Rat(2, 5), Rat(1, 10000));
  TightInstance ti = tight_instance(spec);
  CHECK(closed_form_value(ti.instance) == Rat(2, 5));

  TightInstanceSpec spec7 = make_tight_spec(Rat(2, 7), Rat(1, 10000));
  TightInstance ti7 = tight_instance(spec7);
  CHECK(closed_form_value(ti7.instance) == Rat(2, 7));
}

TEST_CASE("tight_instance: welfare ratio extrapolates exactly to t") {
  for (const Rat& t : {Rat(1, 3), Rat(2, 5), Rat(2, 7)}) {
    Rat e1(1, 64), e2(1, 128);
    auto parts_at = [&](const Rat& eps) {
      TightInstanceSpec spec = make_tight_spec(t, eps);
      TightInstance ti = tight_instance(spec);
      AuctionOutcome out = run_gsp(ti.instance, ti.bids);
      OptStats st = opt_stats(ti.instance);
      return std::pair<Rat, Rat>(out.total_value(), st.opt_total);
    };
    auto [n1, d1] = parts_at(e1);
    auto [n2, d2] = parts_at(e2);
    // both welfare and opt are linear in eps; extrapolate each to eps = 0
    Rat n0 = n1 - e1 * (n2 - n1) / (e2 - e1);
    Rat d0 = d1 - e1 * (d2 - d1) / (e2 - e1);
    CHECK(n0 / d0 == t);
  }
}

TEST_CASE("tight_instance: ratio never falls below the instance bound") {
  for (const Rat& t : {Rat(1, 3), Rat(2, 5), Rat(2, 7)}) {
    TightInstanceSpec spec = make_tight_spec(t, Rat(1, 1000));
    TightInstance ti = tight_instance(spec);
    CHECK(welfare_summary(ti.instance, ti.bids).welfare_ratio >= closed_form_value(ti.instance));
  }
}

TEST_CASE("make_tight_spec refuses irrational roots") {
  CHECK_THROWS_WITH_AS(make_tight_spec(Rat(1, 4), Rat(1, 100)), doctest::Contains("irrational"),
                       input_error);
}

TEST_CASE("poa_zero_family matches its closed form") {
  CHECK(closed_form_value(poa_zero_family(Rat(1))) == Rat(1, 3));
  CHECK(closed_form_value(poa_zero_family(Rat(1, 10))) == Rat(10, 111));
  for (int p = 1; p <= 12; ++p) {
    Rat delta(1, 1 << p);
    Rat bound = closed_form_value(poa_zero_family(delta));
    CHECK(bound == delta / (1 + delta + delta * delta));
    CHECK(bound <= delta);
  }
  CHECK_THROWS_AS(poa_zero_family(Rat(0)), input_error);
  CHECK_THROWS_AS(poa_zero_family(Rat(2)), input_error);
}

TEST_CASE("poa_zero_family bound decreases monotonically toward zero") {
  Rat prev(1);
  for (int p = 0; p <= 16; ++p) {
    Rat bound = closed_form_value(poa_zero_family(Rat(1, 1 << p)));
    CHECK(bound < prev);
    prev = bound;
  }
}

TEST_CASE("random_instance is deterministic and always valid") {
  RandomSpec rs;
  rs.seed = 42;
  rs.n = 4;
  rs.m = 3;
  rs.s = 3;
  Instance a = random_instance(rs);
  Instance b = random_instance(rs);
  CHECK(a.values == b.values);
  CHECK(a.discounts == b.discounts);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomSpec r2;
    r2.seed = seed;
    r2.n = 1 + static_cast<int>(seed % 6);
    r2.m = 1 + static_cast<int>(seed % 4);
    r2.s = 1 + static_cast<int>(seed % 5);
    CHECK_NOTHROW(random_instance(r2));  // construction respects the invariants
  }
}

TEST_CASE("random_instance: smoothness one flattens every discount row") {
  RandomSpec rs;
  rs.seed = 7;
  rs.n = 2;
  rs.m = 3;
  rs.s = 4;
  rs.smoothness = 1;
  Instance inst = random_instance(rs);
  for (const auto& row : inst.discounts)
    for (const auto& d : row) CHECK(d == Rat(1));
}
