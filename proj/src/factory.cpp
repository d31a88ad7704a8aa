#include "gsp/factory.hpp"

#include <random>
#include <string>

namespace gsp {

namespace {

// Half of (0, 1/2) checks appear in several entry points.
void check_target(const Rat& t) {
  if (sgn(t) <= 0 || t >= Rat(1, 2))
    throw input_error("target t must lie strictly between 0 and 1/2");
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

Rat tight_family_bound(int s, const Rat& x) {
  Rat num = s - 1 + x;
  Rat den = (1 + x) * (s - 1 + x) + s + x;
  return num / den;
}

SxSolution solve_s_x(const Rat& t, int s_override) {
  check_target(t);

  // Smallest s >= 2 with (s-1)/(2s-1) >= t, i.e. s >= (1-t)/(1-2t).
  int s = 2;
  while (Rat(s - 1) < t * (2 * s - 1)) ++s;
  if (s_override > 0) {
    if (s_override < s)
      throw input_error("s = " + std::to_string(s_override) + " is too small for t = " +
                        rat_to_string(t) + "; need s >= " + std::to_string(s));
    s = s_override;
  }

  SxSolution sol;
  sol.s = s;
  sol.qa = t;
  sol.qb = t * (s + 1) - 1;
  sol.qc = t * (2 * s - 1) - (s - 1);

  Rat disc = sol.qb * sol.qb - 4 * sol.qa * sol.qc;
  Rat root;
  if (rational_sqrt(disc, &root)) {
    sol.exact = true;
    sol.x = (-sol.qb + root) / (2 * sol.qa);
    sol.x_lo = sol.x;
    sol.x_hi = sol.x;
    return sol;
  }

  // Isolate the nonnegative root by bisection on the quadratic.
  sol.exact = false;
  auto quad = [&](const Rat& x) -> Rat { return sol.qa * x * x + sol.qb * x + sol.qc; };
  Rat lo(0), hi(1);
  while (sgn(quad(hi)) < 0) hi *= 2;
  for (int iter = 0; iter < 64 && hi - lo > Rat(1, 1000000); ++iter) {
    Rat mid = (lo + hi) / 2;
    if (sgn(quad(mid)) < 0)
      lo = mid;
    else
      hi = mid;
  }
  sol.x_lo = lo;
  sol.x_hi = hi;
  return sol;
}

Rat approximate_x(const Rat& t, int s, const Rat& tol) {
  check_target(t);
  if (sgn(tol) <= 0) throw input_error("approximation tolerance must be positive");

  Rat lo(0), hi(1);
  while (tight_family_bound(s, hi) > t) hi *= 2;
  // The bound is strictly decreasing in x; bisect until within tol.
  for (int iter = 0; iter < 256; ++iter) {
    Rat mid = (lo + hi) / 2;
    Rat b = tight_family_bound(s, mid);
    Rat err = b > t ? b - t : t - b;
    if (err <= tol) return mid;
    if (b > t)
      lo = mid;
    else
      hi = mid;
  }
  throw internal_error("bisection for x did not converge");
}

TightInstanceSpec make_tight_spec(const Rat& t, const Rat& eps, int s_override) {
  if (sgn(eps) <= 0) throw input_error("perturbation eps must be positive");
  SxSolution sol = solve_s_x(t, s_override);
  if (!sol.exact)
    throw input_error("the root x for t = " + rat_to_string(t) +
                      " is irrational; pick a rational-rooted target or use an approximate x");
  TightInstanceSpec spec;
  spec.t = t;
  spec.s = sol.s;
  spec.x = sol.x;
  spec.eps = eps;
  return spec;
}

TightInstance tight_instance(const TightInstanceSpec& spec) {
  if (spec.s < 2) throw input_error("tight family needs s >= 2");
  if (sgn(spec.x) < 0) throw input_error("x must be nonnegative");
  if (sgn(spec.eps) <= 0) throw input_error("perturbation eps must be positive");
  if (tight_family_bound(spec.s, spec.x) != spec.t)
    throw input_error("spec is inconsistent: the family bound at (s, x) is not t");

  int s = spec.s;
  int n = 2 * s;
  const Rat& x = spec.x;
  const Rat& eps = spec.eps;

  Instance inst;
  inst.n = n;
  inst.m = s;
  inst.s = s;
  inst.values.assign(n, std::vector<Rat>(s, Rat(0)));
  inst.discounts.assign(s, std::vector<Rat>(s, Rat(1)));
  for (int j = 0; j < s; ++j) inst.discounts[j][0] = 1 + x;

  // First group: bidder 1 wants auction 1, bidders 2..s-1 their own auction,
  // bidder s a sliver of every auction but the last. Second group: auction s.
  inst.values[0][0] = (1 + eps) * (1 + x);
  for (int i = 2; i <= s - 1; ++i) inst.values[i - 1][i - 1] = 1 + eps;
  for (int j = 0; j < s - 1; ++j) inst.values[s - 1][j] = eps;
  for (int i = s; i < n; ++i) inst.values[i][s - 1] = 1;

  BidProfile bids = zero_bids(n, s);
  for (int i = 1; i <= s - 1; ++i) bids.bids[i - 1][i - 1] = ExtRat(eps);
  for (int j = 0; j < s - 1; ++j) bids.bids[s - 1][j] = ExtRat::infinity();
  for (int i = 0; i < s; ++i) bids.bids[i][s - 1] = ExtRat(1 + eps);

  TightInstance out;
  out.instance = validate_instance(inst);
  out.bids = std::move(bids);
  out.expected_limit_ratio = spec.t;
  return out;
}

Instance poa_zero_family(const Rat& delta) {
  if (sgn(delta) <= 0 || delta > 1) throw input_error("delta must lie in (0, 1]");
  Instance inst;
  inst.n = 2;
  inst.m = 1;
  inst.s = 2;
  inst.values = {{Rat(1)}, {Rat(1)}};
  inst.discounts = {{Rat(1), delta}};
  return validate_instance(inst);
}

Instance random_instance(const RandomSpec& spec) {
  if (spec.n < 1 || spec.m < 1 || spec.s < 1) throw input_error("dimensions must be positive");
  if (spec.max_value_num < 0 || spec.max_value_den < 1)
    throw input_error("bad value range");
  if (sgn(spec.smoothness) < 0 || spec.smoothness > 1)
    throw input_error("smoothness must lie in [0, 1]");

  std::mt19937_64 rng(spec.seed);

  Instance inst;
  inst.n = spec.n;
  inst.m = spec.m;
  inst.s = spec.s;

  inst.values.assign(spec.n, std::vector<Rat>(spec.m));
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.m; ++j) {
      Rat v(draw_below(rng, spec.max_value_num + 1), draw_below(rng, spec.max_value_den) + 1);
      v.canonicalize();
      inst.values[i][j] = v;
    }
  }

  // d_{j,1} = 1; each later slot keeps a random fraction in [smoothness, 1]
  // of the previous one (drawn on a quarter grid).
  inst.discounts.assign(spec.m, std::vector<Rat>(spec.s));
  for (int j = 0; j < spec.m; ++j) {
    inst.discounts[j][0] = 1;
    for (int k = 1; k < spec.s; ++k) {
      Rat ratio = spec.smoothness + (1 - spec.smoothness) * Rat(draw_below(rng, 5), 4);
      ratio.canonicalize();
      inst.discounts[j][k] = inst.discounts[j][k - 1] * ratio;
    }
  }
  return validate_instance(inst);
}

BidProfile random_bids(const Instance& inst, std::uint64_t seed, int max_num, int max_den) {
  std::mt19937_64 rng(seed);
  BidProfile bids = zero_bids(inst.n, inst.m);
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      Rat b(draw_below(rng, max_num + 1), draw_below(rng, max_den) + 1);
      b.canonicalize();
      bids.bids[i][j] = ExtRat(b);
    }
  }
  return bids;
}

}  // namespace gsp
