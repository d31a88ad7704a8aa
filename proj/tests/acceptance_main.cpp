// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every comparison is exact unless the criterion states a tolerance.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "gsp/charging.hpp"
#include "gsp/equilibrium.hpp"
#include "gsp/search.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gsp;
using namespace gsp::testutil;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;
};

int failures = 0;

template <typename Fn>
void criterion(int id, const std::string& title, double budget_seconds, Fn&& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.details = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    outcome.pass = false;
    outcome.details += (outcome.details.empty() ? "" : "; ") + std::string("over time budget of ") +
                       std::to_string(budget_seconds) + "s";
  }
  if (!outcome.pass) ++failures;
  std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " ("
            << std::fixed << std::setprecision(2) << elapsed << "s"
            << (outcome.details.empty() ? "" : "; " + outcome.details) << ")\n";
}

Rat abs_rat(const Rat& r) { return sgn(r) < 0 ? Rat(-r) : r; }

Instance flat_triple() {
  std::vector<std::vector<std::string>> d(3, {"1", "1", "1"});
  return make_instance(1, 3, 3, {{"1", "1", "1"}}, d);
}

// Five strictly ascending grid levels anchored to the instance's values.
std::vector<Rat> five_point_grid(const Instance& inst) {
  Rat vmax(0);
  for (const auto& row : inst.values)
    for (const auto& v : row)
      if (v > vmax) vmax = v;
  if (sgn(vmax) == 0) vmax = 1;

  std::vector<Rat> levels = {Rat(0), vmax / 4, vmax / 2, vmax, vmax + 1};
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  Rat pad = vmax + 2;
  while (levels.size() < 5) {
    levels.push_back(pad);
    pad += 1;
  }
  return levels;
}

// Equilibria retained for the proxy-inequality criterion.
struct RetainedProfile {
  Instance instance;
  BidProfile bids;
};
std::vector<RetainedProfile> retained;

}  // namespace

int main() {
  criterion(1, "closed-form bound of three flat auctions is 2/5, simplified 1/3", 1.0, [] {
    Outcome o;
    Instance inst = flat_triple();
    Rat closed = closed_form_value(inst);
    Rat simplified = bound_simplified(inst);
    o.pass = closed == Rat(2, 5) && simplified == Rat(1, 3);
    if (!o.pass)
      o.details = "closed = " + rat_to_string(closed) + ", simplified = " +
                  rat_to_string(simplified);
    return o;
  });

  criterion(2, "formula and hull intersection agree on 1000 random instances", 30.0, [] {
    Outcome o;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
      RandomSpec rs;
      rs.seed = trial * 31 + 17;
      rs.n = 1;
      rs.m = 1 + static_cast<int>(trial % 5);
      rs.s = 2 + static_cast<int>(trial % 5);
      rs.smoothness = Rat(trial % 5, 5);
      Instance inst = random_instance(rs);
      Rat formula = closed_form_value(inst);
      Rat geometric = envelope_intersection(pareto_points(inst)).t_star;
      if (formula != geometric) {
        o.pass = false;
        o.details = "trial " + std::to_string(trial) + ": " + rat_to_string(formula) +
                    " != " + rat_to_string(geometric);
        return o;
      }
    }
    return o;
  });

  criterion(3, "tight family: exact equilibrium and ratio within 10*eps of t", 5.0, [] {
    Outcome o;
    for (const Rat& t : {Rat(1, 3), Rat(2, 5)}) {
      Rat eps(1, 10000);
      TightInstance ti = tight_instance(make_tight_spec(t, eps));
      EquilibriumReport report = verify_equilibrium(ti.instance, ti.bids);
      if (!report.verdict) {
        o.pass = false;
        o.details = "t = " + rat_to_string(t) + ": profile rejected";
        return o;
      }
      for (const auto& b : report.bidders) {
        if (sgn(b.gap) != 0) {
          o.pass = false;
          o.details = "t = " + rat_to_string(t) + ": nonzero gap";
          return o;
        }
      }
      retained.push_back({ti.instance, ti.bids});

      Rat err = abs_rat(welfare_summary(ti.instance, ti.bids).welfare_ratio - t);
      if (err > 10 * eps) {
        o.pass = false;
        o.details = "t = " + rat_to_string(t) + ": ratio error " + rat_to_string(err);
        return o;
      }
      Rat eps_fine(1, 100000);
      TightInstance fine = tight_instance(make_tight_spec(t, eps_fine));
      Rat err_fine = abs_rat(welfare_summary(fine.instance, fine.bids).welfare_ratio - t);
      if (err < 9 * err_fine) {
        o.pass = false;
        o.details = "t = " + rat_to_string(t) + ": error shrank only by " +
                    rat_to_decimal(err / err_fine, 3);
        return o;
      }
    }
    return o;
  });

  criterion(4, "charging certificates verify on 1000 random instance/profile pairs", 60.0, [] {
    Outcome o;
    int audited = 0;
    for (std::uint64_t pair = 0; pair < 1000; ++pair) {
      RandomSpec rs;
      rs.seed = pair * 97 + 11;
      rs.n = 1 + static_cast<int>(pair % 6);
      rs.m = 1 + static_cast<int>(pair % 3);
      rs.s = 1 + static_cast<int>((pair / 3) % 5);
      rs.smoothness = Rat(pair % 4, 4);
      Instance inst = random_instance(rs);
      BidProfile bids = random_bids(inst, pair * 131 + 7);
      OptStats opt = opt_stats(inst);
      for (int j = 0; j < inst.m; ++j) {
        if (sgn(opt.opt_per_auction[j]) == 0) continue;
        ChargingCertificate cert = build_certificate(inst, bids, j);
        CertificateVerdict verdict = verify_certificate(cert);
        ++audited;
        if (!verdict.ok) {
          o.pass = false;
          o.details = "pair " + std::to_string(pair) + ", auction " + std::to_string(j + 1) +
                      ": " + verdict.first_failure;
          return o;
        }
      }
    }
    o.details = std::to_string(audited) + " auction certificates";
    return o;
  });

  criterion(5, "grid equilibria dominate the bound on 50 random tiny instances", 600.0, [] {
    Outcome o;
    const int dims[7][2] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {4, 2}};
    int instances = 0;
    std::uint64_t found_total = 0;
    for (std::uint64_t seed = 1; instances < 50; ++seed) {
      RandomSpec rs;
      rs.seed = seed * 613 + 29;
      rs.n = dims[seed % 7][0];
      rs.m = dims[seed % 7][1];
      rs.s = 2;
      rs.max_value_num = 4;
      rs.max_value_den = 2;
      Instance inst = random_instance(rs);
      if (sgn(opt_stats(inst).opt_total) == 0) continue;
      ++instances;

      GridSpec grid;
      grid.bid_levels = five_point_grid(inst);
      SearchReport report = enumerate_equilibria(inst, grid);
      found_total += report.equilibria.size();
      for (const auto& fe : report.equilibria) {
        if (fe.welfare_ratio < report.bound) {
          o.pass = false;
          o.details = "seed " + std::to_string(seed) + " profile " +
                      std::to_string(fe.profile_id) + ": ratio " +
                      rat_to_string(fe.welfare_ratio) + " < bound " +
                      rat_to_string(report.bound);
          return o;
        }
        retained.push_back({inst, fe.bids});
      }
    }
    o.details = std::to_string(found_total) + " equilibria across 50 instances";
    return o;
  });

  criterion(6, "vanishing family bound equals delta/(1+delta+delta^2)", 1.0, [] {
    Outcome o;
    for (const Rat& delta : {Rat(1), Rat(1, 10), Rat(1, 100), Rat(1, 1000)}) {
      Rat bound = closed_form_value(poa_zero_family(delta));
      if (bound != delta / (1 + delta + delta * delta) || bound > delta) {
        o.pass = false;
        o.details = "delta = " + rat_to_string(delta) + ": bound " + rat_to_string(bound);
        return o;
      }
    }
    return o;
  });

  criterion(7, "best responses match the enumeration oracles on 200 menus", 60.0, [] {
    Outcome o;
    const long grid = 1000;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      auto menus = random_menus(seed * 7 + 3, /*allow_inf=*/seed % 4 == 0);

      Rat pure = solve_pure(menus).value;
      Rat pure_oracle = pure_enumeration_oracle(menus);
      if (pure != pure_oracle) {
        o.pass = false;
        o.details = "menu " + std::to_string(seed) + ": pure " + rat_to_string(pure) +
                    " != " + rat_to_string(pure_oracle);
        return o;
      }

      Rat mixed = solve_mixed(menus).expected_value;
      Rat oracle = grid_mix_oracle(menus, grid);
      Rat spread(0);
      for (const auto& menu : menus) {
        Rat top(0);
        for (const auto& item : menu)
          if (!item.payment.is_inf() && item.value > top) top = item.value;
        spread += top;
      }
      if (mixed < oracle || mixed - oracle > spread / grid) {
        o.pass = false;
        o.details = "menu " + std::to_string(seed) + ": mixed " + rat_to_string(mixed) +
                    " vs oracle " + rat_to_string(oracle);
        return o;
      }
    }
    return o;
  });

  criterion(8, "verified equilibria satisfy the aggregate proxy and payment bounds", 30.0, [] {
    Outcome o;
    if (retained.empty()) {
      o.pass = false;
      o.details = "no equilibria retained from criteria 3 and 5";
      return o;
    }
    for (size_t t = 0; t < retained.size(); ++t) {
      const auto& rp = retained[t];
      AuctionOutcome out = run_gsp(rp.instance, rp.bids);
      ProxyValueTable pv = proxy_values(rp.instance, rp.bids);
      Rat value = out.total_value();
      if (value < pv.total() || value < out.total_payment()) {
        o.pass = false;
        o.details = "profile " + std::to_string(t) + " violates an aggregate bound";
        return o;
      }
    }
    o.details = std::to_string(retained.size()) + " profiles checked";
    return o;
  });

  if (failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
