#pragma once

#include <vector>

#include "gsp/rational.hpp"

namespace gsp {

// A multi-auction market: n bidders, m auctions, s slots per auction.
// Discount rows are non-increasing with a positive top slot; slot lookups
// beyond s read as zero.
struct Instance {
  int n = 0;
  int m = 0;
  int s = 0;
  std::vector<std::vector<Rat>> values;     // n x m, v[i][j]
  std::vector<std::vector<Rat>> discounts;  // m x s, d[j][k-1]

  const Rat& value(int i, int j) const { return values[i][j]; }

  // Slot index k is 1-based to match the payment rule; k > s yields 0.
  Rat discount(int j, int k) const {
    if (k < 1) throw internal_error("slot index must be >= 1");
    if (k > s) return Rat(0);
    return discounts[j][k - 1];
  }

  // Sum of d_{j,1}..d_{j,k} (clamped at s).
  Rat discount_prefix(int j, int k) const {
    Rat sum(0);
    for (int l = 1; l <= k && l <= s; ++l) sum += discounts[j][l - 1];
    return sum;
  }
};

// One deterministic bid per bidder per auction; +inf allowed.
struct BidProfile {
  std::vector<std::vector<ExtRat>> bids;  // n x m

  int n() const { return static_cast<int>(bids.size()); }
  int m() const { return bids.empty() ? 0 : static_cast<int>(bids[0].size()); }
  const ExtRat& bid(int i, int j) const { return bids[i][j]; }
};

BidProfile zero_bids(int n, int m);

// Returns the instance unchanged iff all structural invariants hold;
// otherwise throws input_error naming the first violation.
Instance validate_instance(Instance raw);

// Dimension and sign checks for a profile against an instance.
void check_bid_profile(const Instance& inst, const BidProfile& bids);

}  // namespace gsp
