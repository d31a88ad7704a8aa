#pragma once

#include <vector>

#include "gsp/best_response.hpp"

namespace gsp {

struct BidderReport {
  Rat current_value;
  Rat current_payment;
  Rat best_response_value;
  Rat gap;        // best_response_value - current_value
  Rat roi_slack;  // current_value - current_payment
};

struct EquilibriumReport {
  std::vector<BidderReport> bidders;
  Rat tolerance;
  bool verdict;  // every gap <= tolerance and every roi_slack >= 0
};

// Checks the profile bidder by bidder against the strongest unilateral
// deviation: the optimal (possibly randomized) ROI-feasible response to the
// others' fixed bids.
EquilibriumReport verify_equilibrium(const Instance& inst, const BidProfile& bids,
                                     const Rat& eps_tol = Rat(0));

}  // namespace gsp
