#pragma once

#include <vector>

#include "gsp/menu.hpp"

namespace gsp {

// Deterministic optimum of the bidder program: one menu item per auction,
// maximizing total value subject to total payment <= total value.
struct PureBestResponse {
  std::vector<MenuItem> selection;   // one per auction, auction order
  std::vector<ExtRat> witness_bids;  // the bid row realizing the selection
  Rat value;
  Rat payment;
};

struct MixedMenuEntry {
  MenuItem item;
  Rat prob;
};

// Optimum over independent per-auction randomizations. At most one auction
// carries a two-point distribution; the rest are deterministic.
struct MixedResponse {
  std::vector<std::vector<MixedMenuEntry>> distributions;  // per auction
  Rat expected_value;
  Rat expected_payment;
  Rat lambda;  // multiplier at which the response was certified
};

// Menu-level solvers. Items with +inf payment are ignored; every auction
// must still offer at least one finite item (lose qualifies).
PureBestResponse solve_pure(const std::vector<std::vector<MenuItem>>& menus);
MixedResponse solve_mixed(const std::vector<std::vector<MenuItem>>& menus);

PureBestResponse best_response_pure(const Instance& inst, int i, const BidProfile& bids);
MixedResponse best_response_mixed(const Instance& inst, int i, const BidProfile& bids);

std::vector<std::vector<MenuItem>> all_menus(const Instance& inst, int i, const BidProfile& bids);

}  // namespace gsp
