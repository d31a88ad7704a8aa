#include "gsp/instance.hpp"

#include <string>

namespace gsp {

BidProfile zero_bids(int n, int m) {
  BidProfile b;
  b.bids.assign(n, std::vector<ExtRat>(m, ExtRat(Rat(0))));
  return b;
}

Instance validate_instance(Instance raw) {
  if (raw.n < 1) throw input_error("bidder count must be >= 1");
  if (raw.m < 1) throw input_error("auction count must be >= 1");
  if (raw.s < 1) throw input_error("slot count must be >= 1");

  if (static_cast<int>(raw.values.size()) != raw.n)
    throw input_error("values: expected " + std::to_string(raw.n) + " rows");
  for (int i = 0; i < raw.n; ++i) {
    if (static_cast<int>(raw.values[i].size()) != raw.m)
      throw input_error("values: row " + std::to_string(i + 1) + " has wrong length");
    for (int j = 0; j < raw.m; ++j) {
      if (sgn(raw.values[i][j]) < 0)
        throw input_error("values: negative entry at bidder " + std::to_string(i + 1) +
                          ", auction " + std::to_string(j + 1));
    }
  }

  if (static_cast<int>(raw.discounts.size()) != raw.m)
    throw input_error("discounts: expected " + std::to_string(raw.m) + " rows");
  for (int j = 0; j < raw.m; ++j) {
    const auto& row = raw.discounts[j];
    if (static_cast<int>(row.size()) != raw.s)
      throw input_error("discounts: row " + std::to_string(j + 1) + " has wrong length");
    if (sgn(row[0]) <= 0)
      throw input_error("discounts: d_{" + std::to_string(j + 1) + ",1} must be positive");
    for (int k = 0; k + 1 < raw.s; ++k) {
      if (row[k] < row[k + 1])
        throw input_error("discounts: row " + std::to_string(j + 1) +
                          " increases at slot " + std::to_string(k + 2));
    }
    if (sgn(row[raw.s - 1]) < 0)
      throw input_error("discounts: row " + std::to_string(j + 1) + " has a negative entry");
  }

  return raw;
}

void check_bid_profile(const Instance& inst, const BidProfile& bids) {
  if (bids.n() != inst.n || bids.m() != inst.m)
    throw input_error("bid profile dimensions do not match the instance");
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      const ExtRat& b = bids.bid(i, j);
      if (!b.is_inf() && sgn(b.finite()) < 0)
        throw input_error("bids: negative bid at bidder " + std::to_string(i + 1) +
                          ", auction " + std::to_string(j + 1));
    }
  }
}

}  // namespace gsp
