#pragma once

#include <utility>
#include <vector>

#include "gsp/mechanism.hpp"

namespace gsp {

// One achievable outcome for a bidder in one auction. slot 0 means losing
// (no slot in [s]): value 0, payment 0. A slot priced behind an opposing
// +inf bid is listed with payment +inf and witness +inf; no finite bid
// reaches it.
struct MenuItem {
  int auction = 0;  // 0-based j
  int slot = 0;     // 1..s, or 0 for lose
  Rat value;
  ExtRat payment;
  ExtRat witness;

  bool is_lose() const { return slot == 0; }
};

// Enumerates every (slot, payment) pair bidder i can reach in auction j
// against the others' fixed bids, honoring the smaller-index tie-break.
// Slots blocked by exact ties among opponents are omitted. Witnesses follow
// a strict-beat convention: midpoint to the next higher opposing bid, or
// opposing-max plus one for the top slot; ties only where a strict beat
// cannot reach the slot.
std::vector<MenuItem> deviation_menu(const Instance& inst, const BidProfile& bids, int j, int i);

// Same, with the opposing bids given explicitly as (bidder index, bid).
std::vector<MenuItem> deviation_menu_against(const Instance& inst, int j, int i,
                                             const std::vector<std::pair<int, ExtRat>>& opponents);

}  // namespace gsp
