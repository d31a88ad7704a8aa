#include "gsp/best_response.hpp"

#include <algorithm>
#include <numeric>

namespace gsp {

namespace {

struct Item {
  Rat value;
  Rat payment;
  Rat slack;  // value - payment
  int menu_index;
};

// Drops +inf-payment items; they can never be part of a feasible bundle.
std::vector<std::vector<Item>> finite_items(const std::vector<std::vector<MenuItem>>& menus) {
  std::vector<std::vector<Item>> out(menus.size());
  for (size_t a = 0; a < menus.size(); ++a) {
    for (size_t t = 0; t < menus[a].size(); ++t) {
      const MenuItem& mi = menus[a][t];
      if (mi.payment.is_inf()) continue;
      out[a].push_back({mi.value, mi.payment.finite(), mi.value - mi.payment.finite(),
                        static_cast<int>(t)});
    }
    if (out[a].empty())
      throw internal_error("menu without a finite item; lose should always be present");
  }
  return out;
}

struct PureSearch {
  const std::vector<std::vector<Item>>& items;
  std::vector<int> order;          // auctions sorted by menu size
  std::vector<Rat> suffix_value;   // optimistic value of the remaining auctions
  std::vector<Rat> suffix_slack;   // optimistic slack of the remaining auctions
  std::vector<int> current;
  std::vector<int> best_choice;
  Rat best_value{-1};
  Rat best_payment{0};

  explicit PureSearch(const std::vector<std::vector<Item>>& it) : items(it) {
    size_t m = items.size();
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return items[a].size() < items[b].size(); });
    suffix_value.assign(m + 1, Rat(0));
    suffix_slack.assign(m + 1, Rat(0));
    for (int t = static_cast<int>(m) - 1; t >= 0; --t) {
      Rat mv = items[order[t]][0].value;
      Rat ms = items[order[t]][0].slack;
      for (const Item& item : items[order[t]]) {
        if (item.value > mv) mv = item.value;
        if (item.slack > ms) ms = item.slack;
      }
      suffix_value[t] = suffix_value[t + 1] + mv;
      suffix_slack[t] = suffix_slack[t + 1] + ms;
    }
    current.assign(m, 0);
  }

  void dfs(size_t t, const Rat& value, const Rat& payment, const Rat& slack) {
    if (value + suffix_value[t] <= best_value) return;
    if (slack + suffix_slack[t] < 0) return;
    if (t == items.size()) {
      if (sgn(slack) >= 0 && value > best_value) {
        best_value = value;
        best_payment = payment;
        best_choice = current;
      }
      return;
    }
    int a = order[t];
    for (size_t idx = 0; idx < items[a].size(); ++idx) {
      const Item& item = items[a][idx];
      current[a] = static_cast<int>(idx);
      dfs(t + 1, value + item.value, payment + item.payment, slack + item.slack);
    }
  }
};

struct Selection {
  std::vector<int> choice;
  Rat value{0};
  Rat slack{0};
};

// Per-auction argmax of value + lambda * slack. On score ties the plus side
// prefers the larger slack (the winner just above lambda), the minus side the
// smaller (the winner just below); remaining ties go to the earlier item.
Selection select_at(const std::vector<std::vector<Item>>& items, const Rat& lambda, bool plus) {
  Selection sel;
  sel.choice.resize(items.size());
  for (size_t a = 0; a < items.size(); ++a) {
    int best = 0;
    Rat best_score = items[a][0].value + lambda * items[a][0].slack;
    for (size_t idx = 1; idx < items[a].size(); ++idx) {
      const Item& item = items[a][idx];
      Rat score = item.value + lambda * item.slack;
      if (score > best_score) {
        best = static_cast<int>(idx);
        best_score = score;
      } else if (score == best_score) {
        const Rat& cur = items[a][best].slack;
        if (plus ? item.slack > cur : item.slack < cur) best = static_cast<int>(idx);
      }
    }
    sel.choice[a] = best;
    sel.value += items[a][best].value;
    sel.slack += items[a][best].slack;
  }
  return sel;
}

}  // namespace

PureBestResponse solve_pure(const std::vector<std::vector<MenuItem>>& menus) {
  auto items = finite_items(menus);
  PureSearch search(items);
  search.dfs(0, Rat(0), Rat(0), Rat(0));
  if (search.best_value < 0) throw internal_error("pure best response found no feasible bundle");

  PureBestResponse out;
  out.value = search.best_value;
  out.payment = search.best_payment;
  for (size_t a = 0; a < menus.size(); ++a) {
    const MenuItem& mi = menus[a][items[a][search.best_choice[a]].menu_index];
    out.selection.push_back(mi);
    out.witness_bids.push_back(mi.witness);
  }
  return out;
}

MixedResponse solve_mixed(const std::vector<std::vector<MenuItem>>& menus) {
  auto items = finite_items(menus);
  size_t m = items.size();

  MixedResponse out;
  out.distributions.resize(m);

  auto emit_pure = [&](const Selection& sel, const Rat& lambda) {
    out.lambda = lambda;
    out.expected_value = sel.value;
    out.expected_payment = sel.value - sel.slack;
    for (size_t a = 0; a < m; ++a) {
      const Item& item = items[a][sel.choice[a]];
      out.distributions[a].push_back({menus[a][item.menu_index], Rat(1)});
    }
  };

  Selection at_zero = select_at(items, Rat(0), true);
  if (sgn(at_zero.slack) >= 0) {
    emit_pure(at_zero, Rat(0));
    return out;
  }

  // Breakpoints where the per-auction argmax can change.
  std::vector<Rat> breakpoints;
  for (const auto& menu : items) {
    for (size_t a = 0; a < menu.size(); ++a) {
      for (size_t b = a + 1; b < menu.size(); ++b) {
        if (menu[a].slack == menu[b].slack) continue;
        Rat lambda = (menu[b].value - menu[a].value) / (menu[a].slack - menu[b].slack);
        if (sgn(lambda) > 0) breakpoints.push_back(std::move(lambda));
      }
    }
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  for (const Rat& lambda : breakpoints) {
    Selection plus = select_at(items, lambda, true);
    if (sgn(plus.slack) < 0) continue;

    Selection minus = select_at(items, lambda, false);
    if (sgn(minus.slack) >= 0)
      throw internal_error("left limit of the lambda sweep is unexpectedly feasible");

    // Walk the differing auctions in index order, switching minus -> plus
    // until the ROI constraint closes; the final switch may be fractional.
    Rat need = -minus.slack;
    Rat value = minus.value;
    std::vector<int> choice = minus.choice;
    int frac_auction = -1;
    Rat frac_q(0);
    for (size_t a = 0; a < m && sgn(need) > 0; ++a) {
      if (minus.choice[a] == plus.choice[a]) continue;
      const Item& from = items[a][minus.choice[a]];
      const Item& to = items[a][plus.choice[a]];
      Rat delta = to.slack - from.slack;
      if (delta <= need) {
        choice[a] = plus.choice[a];
        value += to.value - from.value;
        need -= delta;
      } else {
        frac_auction = static_cast<int>(a);
        frac_q = need / delta;
        value += frac_q * (to.value - from.value);
        need = 0;
      }
    }
    if (sgn(need) > 0) throw internal_error("lambda sweep failed to close the ROI constraint");

    out.lambda = lambda;
    out.expected_value = value;
    out.expected_payment = value;  // constraint tight by construction
    for (size_t a = 0; a < m; ++a) {
      if (static_cast<int>(a) == frac_auction) {
        const Item& from = items[a][minus.choice[a]];
        const Item& to = items[a][plus.choice[a]];
        out.distributions[a].push_back({menus[a][from.menu_index], 1 - frac_q});
        out.distributions[a].push_back({menus[a][to.menu_index], frac_q});
      } else {
        const Item& item = items[a][choice[a]];
        out.distributions[a].push_back({menus[a][item.menu_index], Rat(1)});
      }
    }
    return out;
  }

  throw internal_error("lambda sweep found no feasible selection");
}

std::vector<std::vector<MenuItem>> all_menus(const Instance& inst, int i, const BidProfile& bids) {
  std::vector<std::vector<MenuItem>> menus(inst.m);
  for (int j = 0; j < inst.m; ++j) menus[j] = deviation_menu(inst, bids, j, i);
  return menus;
}

PureBestResponse best_response_pure(const Instance& inst, int i, const BidProfile& bids) {
  return solve_pure(all_menus(inst, i, bids));
}

MixedResponse best_response_mixed(const Instance& inst, int i, const BidProfile& bids) {
  return solve_mixed(all_menus(inst, i, bids));
}

}  // namespace gsp
