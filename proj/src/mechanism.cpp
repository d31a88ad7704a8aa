#include "gsp/mechanism.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gsp {

Rat AuctionOutcome::total_value() const {
  Rat sum(0);
  for (const auto& row : value_table)
    for (const auto& v : row) sum += v;
  return sum;
}

Rat AuctionOutcome::total_payment() const {
  Rat sum(0);
  for (const auto& row : payment_table)
    for (const auto& p : row) sum += p;
  return sum;
}

Rat ProxyValueTable::total() const {
  Rat sum(0);
  for (const auto& row : pval)
    for (const auto& v : row) sum += v;
  return sum;
}

AuctionOutcome run_gsp(const Instance& inst, const BidProfile& bids) {
  check_bid_profile(inst, bids);

  AuctionOutcome out;
  out.ranking.assign(inst.m, {});
  out.value_table.assign(inst.n, std::vector<Rat>(inst.m, Rat(0)));
  out.payment_table.assign(inst.n, std::vector<Rat>(inst.m, Rat(0)));

  for (int j = 0; j < inst.m; ++j) {
    int inf_count = 0;
    for (int i = 0; i < inst.n; ++i)
      if (bids.bid(i, j).is_inf()) ++inf_count;
    if (inf_count > 1)
      throw input_error("auction " + std::to_string(j + 1) +
                        " has more than one +inf bid; payments undefined");

    std::vector<int> order(inst.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const ExtRat& ba = bids.bid(a, j);
      const ExtRat& bb = bids.bid(b, j);
      if (ba != bb) return bb < ba;
      return a < b;
    });
    out.ranking[j] = order;

    for (int k = 1; k <= inst.s && k <= inst.n; ++k) {
      int winner = order[k - 1];
      out.value_table[winner][j] = inst.value(winner, j) * inst.discount(j, k);
      ExtRat next = k < inst.n ? bids.bid(order[k], j) : ExtRat(Rat(0));
      ExtRat pay = inst.discount(j, k) * next;
      if (pay.is_inf())
        throw internal_error("infinite payment with a single +inf bid");
      out.payment_table[winner][j] = pay.finite();
    }
  }
  return out;
}

OptStats opt_stats(const Instance& inst) {
  OptStats st;
  st.value_ranking.assign(inst.m, {});
  st.opt_per_auction.assign(inst.m, Rat(0));
  st.opt_total = 0;

  for (int j = 0; j < inst.m; ++j) {
    std::vector<int> order(inst.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const Rat& va = inst.value(a, j);
      const Rat& vb = inst.value(b, j);
      if (va != vb) return vb < va;
      return a < b;
    });
    st.value_ranking[j] = order;

    Rat opt(0);
    for (int k = 1; k <= inst.s && k <= inst.n; ++k)
      opt += inst.value(order[k - 1], j) * inst.discount(j, k);
    st.opt_per_auction[j] = opt;
    st.opt_total += opt;
  }
  return st;
}

int rank_of_bid(const Instance& inst, const BidProfile& bids, int j, int i, const ExtRat& x) {
  int above = 0;
  for (int l = 0; l < inst.n; ++l) {
    if (l == i) continue;
    const ExtRat& b = bids.bid(l, j);
    if (b > x || (b == x && l < i)) ++above;
  }
  return above + 1;
}

ProxyValueTable proxy_values(const Instance& inst, const BidProfile& bids) {
  check_bid_profile(inst, bids);
  for (int j = 0; j < inst.m; ++j) {
    int inf_count = 0;
    for (int i = 0; i < inst.n; ++i)
      if (bids.bid(i, j).is_inf()) ++inf_count;
    if (inf_count > 1)
      throw input_error("auction " + std::to_string(j + 1) +
                        " has more than one +inf bid; payments undefined");
  }

  ProxyValueTable table;
  table.pval.assign(inst.n, std::vector<Rat>(inst.m, Rat(0)));
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.m; ++j) {
      int k = rank_of_bid(inst, bids, j, i, ExtRat(inst.value(i, j)));
      table.pval[i][j] = inst.value(i, j) * inst.discount(j, k);
    }
  }
  return table;
}

WelfareSummary welfare_summary(const Instance& inst, const BidProfile& bids) {
  AuctionOutcome out = run_gsp(inst, bids);
  OptStats st = opt_stats(inst);
  if (sgn(st.opt_total) == 0)
    throw input_error("optimal welfare is zero; welfare ratio undefined");

  WelfareSummary ws;
  ws.total_value = out.total_value();
  ws.total_payment = out.total_payment();
  ws.total_proxy_value = proxy_values(inst, bids).total();
  ws.opt_total = st.opt_total;
  ws.welfare_ratio = ws.total_value / ws.opt_total;
  return ws;
}

}  // namespace gsp
