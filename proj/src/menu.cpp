#include "gsp/menu.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace gsp {

namespace {

int rank_against(const std::vector<std::pair<int, ExtRat>>& opponents, int i, const ExtRat& x) {
  int above = 0;
  for (const auto& [idx, b] : opponents)
    if (b > x || (b == x && idx < i)) ++above;
  return above + 1;
}

}  // namespace

std::vector<MenuItem> deviation_menu_against(const Instance& inst, int j, int i,
                                             const std::vector<std::pair<int, ExtRat>>& opponents) {
  int inf_count = 0;
  for (const auto& [idx, b] : opponents)
    if (b.is_inf()) ++inf_count;
  if (inf_count > 1)
    throw input_error("auction " + std::to_string(j + 1) +
                      " has more than one +inf bid; payments undefined");

  // k-th largest opposing bid, 1-based; zero beyond the list.
  std::vector<ExtRat> opposing;
  opposing.reserve(opponents.size());
  for (const auto& [idx, b] : opponents) opposing.push_back(b);
  std::sort(opposing.begin(), opposing.end(), [](const ExtRat& a, const ExtRat& b) { return b < a; });
  auto kth_opposing = [&](int k) -> ExtRat {
    if (k < 1 || k > static_cast<int>(opposing.size())) return ExtRat(Rat(0));
    return opposing[k - 1];
  };

  // Distinct finite opposing values, descending.
  std::vector<Rat> finite_values;
  for (const auto& b : opposing)
    if (!b.is_inf()) finite_values.push_back(b.finite());
  finite_values.erase(std::unique(finite_values.begin(), finite_values.end()), finite_values.end());

  // Candidate witnesses in priority order: strict beats first, then ties,
  // then zero. First candidate reaching a rank fixes its witness.
  std::vector<Rat> candidates;
  if (!finite_values.empty()) {
    // Beating every finite opponent is meaningful even behind an +inf bid:
    // it reaches the slot right after the unbeatable one.
    candidates.push_back(finite_values.front() + 1);
    for (size_t t = 0; t + 1 < finite_values.size(); ++t)
      candidates.push_back((finite_values[t] + finite_values[t + 1]) / 2);
    if (sgn(finite_values.back()) > 0) candidates.push_back(finite_values.back() / 2);
    for (const Rat& v : finite_values) candidates.push_back(v);
  }
  candidates.push_back(Rat(0));

  std::map<int, ExtRat> witness_by_rank;
  for (const Rat& x : candidates) {
    int r = rank_against(opponents, i, ExtRat(x));
    witness_by_rank.emplace(r, ExtRat(x));
  }
  int zero_rank = rank_against(opponents, i, ExtRat(Rat(0)));

  std::vector<MenuItem> menu;
  if (inf_count == 1) {
    MenuItem top;
    top.auction = j;
    top.slot = 1;
    top.value = inst.value(i, j) * inst.discount(j, 1);
    top.payment = inst.discount(j, 1) * kth_opposing(1);
    top.witness = ExtRat::infinity();
    menu.push_back(std::move(top));
  }

  bool lose_added = false;
  for (const auto& [rank, witness] : witness_by_rank) {
    if (rank <= inst.s) {
      MenuItem item;
      item.auction = j;
      item.slot = rank;
      item.value = inst.value(i, j) * inst.discount(j, rank);
      item.payment = inst.discount(j, rank) * kth_opposing(rank);
      item.witness = witness;
      menu.push_back(std::move(item));
    } else if (!lose_added) {
      MenuItem lose;
      lose.auction = j;
      lose.slot = 0;
      lose.value = 0;
      lose.payment = ExtRat(Rat(0));
      lose.witness = zero_rank > inst.s ? ExtRat(Rat(0)) : witness;
      menu.push_back(std::move(lose));
      lose_added = true;
    }
  }

  std::sort(menu.begin(), menu.end(), [&](const MenuItem& a, const MenuItem& b) {
    int ka = a.slot == 0 ? inst.s + 1 : a.slot;
    int kb = b.slot == 0 ? inst.s + 1 : b.slot;
    return ka < kb;
  });
  return menu;
}

std::vector<MenuItem> deviation_menu(const Instance& inst, const BidProfile& bids, int j, int i) {
  check_bid_profile(inst, bids);
  std::vector<std::pair<int, ExtRat>> opponents;
  opponents.reserve(inst.n - 1);
  for (int l = 0; l < inst.n; ++l)
    if (l != i) opponents.emplace_back(l, bids.bid(l, j));
  return deviation_menu_against(inst, j, i, opponents);
}

}  // namespace gsp
