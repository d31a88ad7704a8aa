#pragma once

#include <cstdint>

#include "gsp/instance.hpp"

namespace gsp {

// Root data for the tight family: the smallest admissible s and the
// nonnegative root x of t*x^2 + (t(s+1)-1)*x + (t(2s-1)-(s-1)) = 0.
// When the discriminant is not a rational square, x is irrational: exact is
// false and [x_lo, x_hi] isolates the root.
struct SxSolution {
  int s = 2;
  bool exact = false;
  Rat x;
  Rat x_lo, x_hi;
  Rat qa, qb, qc;  // quadratic coefficients
};

SxSolution solve_s_x(const Rat& t, int s_override = 0);

// The bound value (s-1+x) / ((1+x)(s-1+x)+s+x) of the family's discounts;
// strictly decreasing in x.
Rat tight_family_bound(int s, const Rat& x);

// Rational x approximating the (possibly irrational) exact root, with the
// bound of the resulting family within tol of t.
Rat approximate_x(const Rat& t, int s, const Rat& tol);

struct TightInstanceSpec {
  Rat t;
  int s = 2;
  Rat x;
  Rat eps;
};

TightInstanceSpec make_tight_spec(const Rat& t, const Rat& eps, int s_override = 0);

struct TightInstance {
  Instance instance;
  BidProfile bids;
  Rat expected_limit_ratio;  // t
};

// The 2s-bidder, s-auction family with d_{j,1} = 1+x and d_{j,k>=2} = 1,
// together with its prescribed equilibrium bids.
TightInstance tight_instance(const TightInstanceSpec& spec);

// Single auction, s = 2, d = (1, delta), two unit-value bidders; its bound
// is delta / (1 + delta + delta^2), vanishing with delta.
Instance poa_zero_family(const Rat& delta);

struct RandomSpec {
  std::uint64_t seed = 1;
  int n = 2;
  int m = 1;
  int s = 2;
  int max_value_num = 6;  // values are p/q with p <= max_value_num, q <= max_value_den
  int max_value_den = 4;
  Rat smoothness = Rat(0);  // slot-to-slot discount ratios drawn from [smoothness, 1]
};

// Deterministic from the seed: sorted random discount rows with d_{j,1} = 1
// and random rational values.
Instance random_instance(const RandomSpec& spec);

// Random bid profile on the same value scale (used by randomized tests).
BidProfile random_bids(const Instance& inst, std::uint64_t seed, int max_num = 6, int max_den = 4);

}  // namespace gsp
