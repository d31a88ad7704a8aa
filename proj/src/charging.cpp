#include "gsp/charging.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace gsp {

namespace {

std::string tag(const std::string& name, std::initializer_list<int> idx) {
  std::string s = name + "[";
  bool first = true;
  for (int v : idx) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "]";
}

}  // namespace

int phantom_slot(const Instance& inst, const BidProfile& bids, int j, int i) {
  int rank = rank_of_bid(inst, bids, j, i, ExtRat(inst.value(i, j)));
  return std::min(rank, inst.s + 1);
}

ChargingCertificate build_certificate(const Instance& inst, const BidProfile& bids, int j) {
  check_bid_profile(inst, bids);
  AuctionOutcome outcome = run_gsp(inst, bids);
  ProxyValueTable proxies = proxy_values(inst, bids);

  ChargingCertificate cert;
  cert.auction = j;

  // Value-sorted relabeling: rank t (1-based) maps to a bidder index.
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Rat& va = inst.value(a, j);
    const Rat& vb = inst.value(b, j);
    if (va != vb) return vb < va;
    return a < b;
  });
  cert.value_order = order;

  auto val = [&](int t) -> const Rat& { return inst.values[order[t - 1]][j]; };
  auto disc = [&](int k) { return inst.discount(j, k); };
  auto pval = [&](int t) -> const Rat& { return proxies.pval[order[t - 1]][j]; };
  auto phantom = [&](int t) { return phantom_slot(inst, bids, j, order[t - 1]); };
  // By bid rank l: the bid and the payment of the rank-l bidder.
  auto bid_at = [&](int l) -> const ExtRat& { return bids.bids[outcome.ranking[j][l - 1]][j]; };
  auto pay_at = [&](int l) -> const Rat& {
    return outcome.payment_table[outcome.ranking[j][l - 1]][j];
  };

  int top = std::min(inst.s, inst.n);
  cert.opt_j = 0;
  for (int t = 1; t <= top; ++t) cert.opt_j += val(t) * disc(t);
  if (sgn(cert.opt_j) == 0)
    throw input_error("auction " + std::to_string(j + 1) +
                      " contributes nothing to the optimal welfare; no certificate");

  cert.sum_pval = 0;
  cert.sum_pay = 0;
  for (int i = 0; i < inst.n; ++i) {
    cert.sum_pval += proxies.pval[i][j];
    cert.sum_pay += outcome.payment_table[i][j];
  }

  // The diagonal scheme: bidder of rank t short of its phantom slot charges
  // the mass points (d_row - d_{row+1}) along its diagonal, one column per
  // step. first_col shifts the diagonal for the case-B residual group.
  std::map<int, Rat> column_totals;
  auto charge_bidder = [&](int t, int first_col) {
    int ph = phantom(t);
    for (int row = t; row <= ph - 1; ++row) {
      Rat amount = val(t) * (disc(row) - disc(row + 1));
      int col = first_col + (row - t);
      if (sgn(amount) != 0) {
        cert.charges.push_back({t, col, row, amount});
        column_totals[col] += amount;
        cert.ledger.push_back({tag("mass", {t, col, row}), bid_at(col + 1), val(t)});
      }
    }
  };
  auto charged_total = [&](int t) {
    Rat sum(0);
    for (const auto& c : cert.charges)
      if (c.value_rank == t) sum += c.amount;
    return sum;
  };

  int phantom_top = phantom(1);
  if (phantom_top == 1) {
    cert.case_tag = 'A';
    cert.k = 0;
    cert.alpha = 0;
    cert.q1 = 0;
    cert.q2 = 0;

    for (int t = 1; t <= top; ++t) {
      if (phantom(t) > t) charge_bidder(t, 1);
      cert.ledger.push_back(
          {tag("cover", {t}), ExtRat(pval(t) + charged_total(t)), val(t) * disc(t)});
    }
    for (const auto& [col, total] : column_totals)
      cert.ledger.push_back({tag("column", {col}), ExtRat(pay_at(col)), total});

    cert.ledger.push_back({"aggregate", ExtRat(cert.sum_pval + cert.sum_pay), cert.opt_j});

    Rat mass = cert.sum_pval + cert.sum_pay;
    if (sgn(mass) > 0) {
      cert.r1 = cert.sum_pval / mass;
      cert.r2 = cert.sum_pay / mass;
    } else {
      cert.r1 = 1;
      cert.r2 = 0;
    }
    cert.ledger.push_back({"total-pval", ExtRat(cert.sum_pval), cert.r1 * cert.opt_j});
    cert.ledger.push_back({"total-payment", ExtRat(cert.sum_pay), cert.r2 * cert.opt_j});
    return cert;
  }

  cert.case_tag = 'B';
  int k = phantom_top - 1;  // in [1, s]
  cert.k = k;

  Rat prefix_k = inst.discount_prefix(j, k);
  cert.q1 = disc(k + 1) / prefix_k;
  cert.q2 = inst.discount_prefix(j, k - 1) / prefix_k;

  Rat group1_opt(0);
  for (int t = 1; t <= std::min(k, top); ++t) group1_opt += val(t) * disc(t);
  cert.alpha = group1_opt / cert.opt_j;

  // Group one: the top-value bidder's proxy value and the payments of the
  // first k-1 slots cover the q^{j,k} share.
  Rat group1_pval(0);
  for (int t = 1; t <= std::min(k, top); ++t) group1_pval += pval(t);
  cert.ledger.push_back({"group1-pval", ExtRat(group1_pval), cert.alpha * cert.q1 * cert.opt_j});

  Rat group1_pay(0);
  for (int l = 1; l <= std::min(k - 1, top); ++l) group1_pay += pay_at(l);
  cert.ledger.push_back({"group1-pay", ExtRat(group1_pay), cert.alpha * cert.q2 * cert.opt_j});

  for (int r = 1; r <= k; ++r) cert.ledger.push_back({tag("top-bid", {r}), bid_at(r), val(1)});

  // Residual group: the case-A scheme shifted onto columns k..s.
  Rat residual_pval(0);
  for (int t = k + 1; t <= top; ++t) {
    if (phantom(t) > t) charge_bidder(t, k);
    residual_pval += pval(t);
    cert.ledger.push_back(
        {tag("cover", {t}), ExtRat(pval(t) + charged_total(t)), val(t) * disc(t)});
  }
  for (const auto& [col, total] : column_totals)
    cert.ledger.push_back({tag("column", {col}), ExtRat(pay_at(col)), total});

  Rat residual_pay(0);
  for (int l = k; l <= top; ++l) residual_pay += pay_at(l);
  cert.ledger.push_back(
      {"group2-residual", ExtRat(residual_pval + residual_pay), (1 - cert.alpha) * cert.opt_j});

  Rat mass = residual_pval + residual_pay;
  if (k < inst.s && sgn(mass) > 0) {
    cert.r1 = residual_pval / mass;
    cert.r2 = residual_pay / mass;
  } else {
    cert.r1 = 1;
    cert.r2 = 0;
  }

  cert.ledger.push_back({"total-pval", ExtRat(cert.sum_pval),
                         (cert.alpha * cert.q1 + (1 - cert.alpha) * cert.r1) * cert.opt_j});
  cert.ledger.push_back({"total-payment", ExtRat(cert.sum_pay),
                         (cert.alpha * cert.q2 + (1 - cert.alpha) * cert.r2) * cert.opt_j});
  return cert;
}

CertificateVerdict verify_certificate(const ChargingCertificate& cert) {
  auto fail = [](const std::string& why) {
    CertificateVerdict v;
    v.ok = false;
    v.first_failure = why;
    return v;
  };

  if (cert.case_tag != 'A' && cert.case_tag != 'B') return fail("unknown case tag");
  if (cert.case_tag == 'A' && cert.k != 0) return fail("case A must have k = 0");
  if (cert.case_tag == 'B' && cert.k < 1) return fail("case B needs k >= 1");
  if (sgn(cert.opt_j) <= 0) return fail("opt_j must be positive");
  if (sgn(cert.alpha) < 0 || cert.alpha > 1) return fail("alpha outside [0,1]");
  if (sgn(cert.r1) < 0 || sgn(cert.r2) < 0) return fail("r must be nonnegative");
  if (cert.r1 + cert.r2 != 1) return fail("r must lie on the 1-simplex");
  if (sgn(cert.q1) < 0 || sgn(cert.q2) < 0) return fail("q must be nonnegative");
  if (cert.q1 + cert.q2 > 1) return fail("q must satisfy q1 + q2 <= 1");

  std::set<std::pair<int, int>> used;
  for (const auto& c : cert.charges) {
    if (sgn(c.amount) < 0) return fail(tag("mass", {c.value_rank, c.column, c.row}) + ": negative");
    if (!used.emplace(c.column, c.row).second)
      return fail(tag("mass", {c.value_rank, c.column, c.row}) + ": mass point used twice");
    if (cert.case_tag == 'B' && c.column < cert.k)
      return fail(tag("mass", {c.value_rank, c.column, c.row}) +
                  ": residual charge outside columns k..s");
  }

  for (const auto& entry : cert.ledger) {
    if (entry.lhs < ExtRat(entry.rhs))
      return fail(entry.label + ": " + ext_to_string(entry.lhs) + " < " + rat_to_string(entry.rhs));
  }

  Rat pval_rate = cert.alpha * cert.q1 + (1 - cert.alpha) * cert.r1;
  Rat pay_rate = cert.alpha * cert.q2 + (1 - cert.alpha) * cert.r2;
  if (cert.sum_pval < pval_rate * cert.opt_j) return fail("aggregate proxy-value bound fails");
  if (cert.sum_pay < pay_rate * cert.opt_j) return fail("aggregate payment bound fails");

  return CertificateVerdict{};
}

}  // namespace gsp
