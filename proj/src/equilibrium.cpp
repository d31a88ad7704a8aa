#include "gsp/equilibrium.hpp"

namespace gsp {

EquilibriumReport verify_equilibrium(const Instance& inst, const BidProfile& bids,
                                     const Rat& eps_tol) {
  AuctionOutcome outcome = run_gsp(inst, bids);

  EquilibriumReport report;
  report.tolerance = eps_tol;
  report.verdict = true;
  report.bidders.reserve(inst.n);

  for (int i = 0; i < inst.n; ++i) {
    BidderReport br;
    br.current_value = 0;
    br.current_payment = 0;
    for (int j = 0; j < inst.m; ++j) {
      br.current_value += outcome.value_table[i][j];
      br.current_payment += outcome.payment_table[i][j];
    }
    br.best_response_value = best_response_mixed(inst, i, bids).expected_value;
    br.gap = br.best_response_value - br.current_value;
    br.roi_slack = br.current_value - br.current_payment;
    if (br.gap > eps_tol || sgn(br.roi_slack) < 0) report.verdict = false;
    report.bidders.push_back(std::move(br));
  }
  return report;
}

}  // namespace gsp
