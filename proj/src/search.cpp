#include "gsp/search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "gsp/best_response.hpp"

namespace gsp {

namespace {

constexpr std::uint64_t kCacheMenuLimit = 300000;

// base^exp, saturating at cap+1 so oversized spaces are detected exactly.
std::uint64_t saturating_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

void validate_grid(const GridSpec& grid) {
  if (grid.bid_levels.empty()) throw input_error("bid grid must be nonempty");
  for (size_t t = 0; t < grid.bid_levels.size(); ++t) {
    if (sgn(grid.bid_levels[t]) < 0) throw input_error("bid grid values must be nonnegative");
    if (t > 0 && grid.bid_levels[t] <= grid.bid_levels[t - 1])
      throw input_error("bid grid values must be strictly ascending");
  }
}

struct ColumnOutcome {
  std::vector<Rat> value;    // per bidder
  std::vector<Rat> payment;  // per bidder
};

// GSP outcome of one auction for one grid column.
ColumnOutcome column_outcome(const Instance& inst, int j, const std::vector<ExtRat>& col) {
  ColumnOutcome out;
  out.value.assign(inst.n, Rat(0));
  out.payment.assign(inst.n, Rat(0));
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (col[a] != col[b]) return col[b] < col[a];
    return a < b;
  });
  for (int k = 1; k <= inst.s && k <= inst.n; ++k) {
    int winner = order[k - 1];
    out.value[winner] = inst.value(winner, j) * inst.discount(j, k);
    ExtRat next = k < inst.n ? col[order[k]] : ExtRat(Rat(0));
    out.payment[winner] = (inst.discount(j, k) * next).finite();
  }
  return out;
}

// Chunked parallel for over [0, total); chunk results keep their index so the
// merge order is canonical no matter how threads are scheduled.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int threads, std::uint64_t chunk_size, Fn&& fn) {
  std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (static_cast<std::uint64_t>(threads) > chunks) threads = static_cast<int>(chunks);

  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::uint64_t chunk = next.fetch_add(1);
      if (chunk >= chunks) return;
      std::uint64_t lo = chunk * chunk_size;
      std::uint64_t hi = std::min(total, lo + chunk_size);
      fn(chunk, lo, hi);
    }
  };
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

Rat surrogate_big(const Instance& inst, const std::vector<Rat>& levels) {
  Rat big(0);
  for (const auto& row : inst.values)
    for (const auto& v : row)
      if (v > big) big = v;
  for (const auto& v : levels)
    if (v > big) big = v;
  return big + 1;
}

SearchReport enumerate_equilibria(const Instance& inst, const GridSpec& grid) {
  validate_grid(grid);
  if (inst.s < 2)
    throw input_error("equilibrium search needs s >= 2 for the bound comparison");

  const int n = inst.n, m = inst.m;
  const std::uint64_t g = grid.bid_levels.size();

  const std::uint64_t columns = saturating_pow(g, n, grid.max_profiles);
  const std::uint64_t profiles = saturating_pow(columns, m, grid.max_profiles);
  if (profiles > grid.max_profiles)
    throw input_error("profile count exceeds the cap of " + std::to_string(grid.max_profiles));

  const std::uint64_t opp_columns = saturating_pow(g, n - 1, grid.max_profiles);
  if (static_cast<std::uint64_t>(n) * m * opp_columns > kCacheMenuLimit)
    throw input_error("grid search shape too large to cache; reduce n, m, or the grid");

  OptStats opt = opt_stats(inst);
  if (sgn(opt.opt_total) == 0)
    throw input_error("optimal welfare is zero; welfare ratio undefined");

  // Per-auction outcome of every bid column.
  std::vector<std::vector<ColumnOutcome>> outcomes(m);
  {
    std::vector<ExtRat> col(n, ExtRat(Rat(0)));
    for (int j = 0; j < m; ++j) {
      outcomes[j].reserve(columns);
      for (std::uint64_t c = 0; c < columns; ++c) {
        std::uint64_t rest = c;
        for (int i = 0; i < n; ++i) {
          col[i] = ExtRat(grid.bid_levels[rest % g]);
          rest /= g;
        }
        outcomes[j].push_back(column_outcome(inst, j, col));
      }
    }
  }

  // Column id with bidder i's digit removed, shared across auctions.
  std::vector<std::vector<std::uint64_t>> opp_of(n, std::vector<std::uint64_t>(columns));
  for (std::uint64_t c = 0; c < columns; ++c) {
    for (int i = 0; i < n; ++i) {
      std::uint64_t id = 0, scale = 1, rest = c;
      for (int l = 0; l < n; ++l) {
        std::uint64_t digit = rest % g;
        rest /= g;
        if (l == i) continue;
        id += digit * scale;
        scale *= g;
      }
      opp_of[i][c] = id;
    }
  }

  // Deviation menus per bidder, auction, and opposing column.
  std::vector<std::vector<std::vector<std::vector<MenuItem>>>> menus(n);
  for (int i = 0; i < n; ++i) {
    menus[i].assign(m, {});
    for (int j = 0; j < m; ++j) {
      menus[i][j].reserve(opp_columns);
      for (std::uint64_t c = 0; c < opp_columns; ++c) {
        std::vector<std::pair<int, ExtRat>> opponents;
        opponents.reserve(n - 1);
        std::uint64_t rest = c;
        for (int l = 0; l < n; ++l) {
          if (l == i) continue;
          opponents.emplace_back(l, ExtRat(grid.bid_levels[rest % g]));
          rest /= g;
        }
        menus[i][j].push_back(deviation_menu_against(inst, j, i, opponents));
      }
    }
  }

  // Mixed best-response value per bidder and per opposing tuple across
  // auctions (tuple key in base opp_columns, auction-major). There are
  // profiles / g^m such tuples, so the profile cap bounds this table too.
  const std::uint64_t keys = saturating_pow(opp_columns, m, grid.max_profiles);
  std::vector<std::vector<Rat>> br_value(n, std::vector<Rat>(keys));
  parallel_chunks(keys, grid.threads, 1024, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::vector<MenuItem>> bundle(m);
    for (std::uint64_t key = lo; key < hi; ++key) {
      for (int i = 0; i < n; ++i) {
        std::uint64_t rest = key;
        for (int j = 0; j < m; ++j) {
          bundle[j] = menus[i][j][rest % opp_columns];
          rest /= opp_columns;
        }
        br_value[i][key] = solve_mixed(bundle).expected_value;
      }
    }
  });

  // Scan all profiles; a chunk records its finds locally, merged in order.
  const std::uint64_t chunk_size = 4096;
  const std::uint64_t chunks = (profiles + chunk_size - 1) / chunk_size;
  std::vector<std::vector<FoundEquilibrium>> found(chunks);

  parallel_chunks(profiles, grid.threads, chunk_size,
                  [&](std::uint64_t chunk, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> cols(m);
    for (std::uint64_t p = lo; p < hi; ++p) {
      std::uint64_t rest = p;
      for (int j = 0; j < m; ++j) {
        cols[j] = rest % columns;
        rest /= columns;
      }

      bool is_equilibrium = true;
      EquilibriumReport report;
      report.tolerance = 0;
      report.verdict = true;
      for (int i = 0; i < n && is_equilibrium; ++i) {
        BidderReport br;
        br.current_value = 0;
        br.current_payment = 0;
        for (int j = 0; j < m; ++j) {
          br.current_value += outcomes[j][cols[j]].value[i];
          br.current_payment += outcomes[j][cols[j]].payment[i];
        }
        br.roi_slack = br.current_value - br.current_payment;
        if (sgn(br.roi_slack) < 0) {
          is_equilibrium = false;
          break;
        }
        std::uint64_t key = 0, scale = 1;
        for (int j = 0; j < m; ++j) {
          key += opp_of[i][cols[j]] * scale;
          scale *= opp_columns;
        }
        br.best_response_value = br_value[i][key];
        br.gap = br.best_response_value - br.current_value;
        if (sgn(br.gap) > 0) {
          is_equilibrium = false;
          break;
        }
        report.bidders.push_back(std::move(br));
      }
      if (!is_equilibrium) continue;

      FoundEquilibrium fe;
      fe.profile_id = p;
      fe.bids = zero_bids(n, m);
      for (int j = 0; j < m; ++j) {
        std::uint64_t rest = cols[j];
        for (int i = 0; i < n; ++i) {
          fe.bids.bids[i][j] = ExtRat(grid.bid_levels[rest % g]);
          rest /= g;
        }
      }
      Rat total_value(0);
      for (const auto& b : report.bidders) total_value += b.current_value;
      fe.welfare_ratio = total_value / opt.opt_total;
      fe.report = std::move(report);
      found[chunk].push_back(std::move(fe));
    }
  });

  SearchReport report;
  report.profiles_scanned = profiles;
  report.bound = closed_form_value(inst);
  for (auto& chunk : found)
    for (auto& fe : chunk) report.equilibria.push_back(std::move(fe));
  for (const auto& fe : report.equilibria) {
    if (!report.has_min_ratio || fe.welfare_ratio < report.min_ratio) {
      report.has_min_ratio = true;
      report.min_ratio = fe.welfare_ratio;
    }
  }
  report.dominance = !report.has_min_ratio || report.min_ratio >= report.bound;
  return report;
}

std::optional<Rat> empirical_poa(const Instance& inst, const GridSpec& grid) {
  SearchReport report = enumerate_equilibria(inst, grid);
  if (!report.has_min_ratio) return std::nullopt;
  return report.min_ratio;
}

}  // namespace gsp
