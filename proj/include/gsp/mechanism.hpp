#pragma once

#include <vector>

#include "gsp/instance.hpp"

namespace gsp {

// Allocation and payments of the generalized second-price rule.
// ranking[j][k-1] is the bidder holding rank k in auction j (ties toward the
// smaller bidder index). Rank k <= s pays d_{j,k} times the next-ranked bid.
struct AuctionOutcome {
  std::vector<std::vector<int>> ranking;         // m x n
  std::vector<std::vector<Rat>> value_table;     // n x m
  std::vector<std::vector<Rat>> payment_table;   // n x m

  Rat total_value() const;
  Rat total_payment() const;
};

// Value-sorted benchmark: i*(j,k) and opt_j.
struct OptStats {
  std::vector<std::vector<int>> value_ranking;  // m x n
  std::vector<Rat> opt_per_auction;             // m
  Rat opt_total;
};

// pval[i][j]: value bidder i would receive by unilaterally bidding v_{i,j}.
struct ProxyValueTable {
  std::vector<std::vector<Rat>> pval;  // n x m

  Rat total() const;
};

struct WelfareSummary {
  Rat total_value;
  Rat total_payment;
  Rat total_proxy_value;
  Rat opt_total;
  Rat welfare_ratio;  // total_value / opt_total
};

AuctionOutcome run_gsp(const Instance& inst, const BidProfile& bids);
OptStats opt_stats(const Instance& inst);
ProxyValueTable proxy_values(const Instance& inst, const BidProfile& bids);
WelfareSummary welfare_summary(const Instance& inst, const BidProfile& bids);

// Rank bidder i would take in auction j when bidding x against the fixed
// bids of the others (1-based; ties toward the smaller index).
int rank_of_bid(const Instance& inst, const BidProfile& bids, int j, int i, const ExtRat& x);

}  // namespace gsp
