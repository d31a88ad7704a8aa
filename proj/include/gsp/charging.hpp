#pragma once

#include <string>
#include <vector>

#include "gsp/mechanism.hpp"

namespace gsp {

// One audited inequality: holds iff lhs >= rhs.
struct LedgerEntry {
  std::string label;
  ExtRat lhs;
  Rat rhs;
};

// A payment mass point (column = payer's rank, row = discount step) charged
// to the bidder of a given value rank, worth value * (d_row - d_{row+1}).
struct MassCharge {
  int value_rank;  // 1-based rank of the charged bidder
  int column;      // 1-based rank of the paying slot
  int row;         // 1-based discount step
  Rat amount;
};

// Constructive decomposition of one auction's welfare contribution.
// Case A: the top-value bidder would win slot 1 bidding truthfully; the
// diagonal charging covers opt_j by proxy values plus payments (alpha = 0).
// Case B: the top-value bidder would win slot k+1; group one (value ranks
// <= k) is covered at the rates q^{j,k}, the residual group reuses the
// case-A scheme on columns k..s.
struct ChargingCertificate {
  int auction = 0;  // 0-based j
  char case_tag = 'A';
  int k = 0;  // case B split slot (1-based); 0 in case A
  Rat alpha;
  Rat r1, r2;  // simplex point of the lossless component
  Rat q1, q2;  // q^{j,k}; zeros in case A
  Rat opt_j;
  Rat sum_pval;  // over all bidders in this auction
  Rat sum_pay;
  std::vector<int> value_order;  // bidder index by value rank (audit trail)
  std::vector<LedgerEntry> ledger;
  std::vector<MassCharge> charges;
};

struct CertificateVerdict {
  bool ok = true;
  std::string first_failure;
};

// Slot bidder i would win in auction j bidding v_{i,j} against the others'
// actual bids; s+1 when no slot.
int phantom_slot(const Instance& inst, const BidProfile& bids, int j, int i);

ChargingCertificate build_certificate(const Instance& inst, const BidProfile& bids, int j);

// Re-checks every ledger inequality, the alpha/r/k invariants, mass-point
// discipline, and the two aggregate bounds, using only the certificate.
CertificateVerdict verify_certificate(const ChargingCertificate& cert);

}  // namespace gsp
