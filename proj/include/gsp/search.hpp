#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsp/equilibrium.hpp"
#include "gsp/pareto.hpp"

namespace gsp {

// Finite bid grid for profile enumeration. The grid restricts only the
// profiles searched; deviations inside the verifier stay exact and
// unrestricted, so reported equilibria are equilibria of the continuous game.
struct GridSpec {
  std::vector<Rat> bid_levels;               // strictly ascending, nonnegative
  std::uint64_t max_profiles = 1679616;      // 6^8
  int threads = 0;                           // 0 = hardware concurrency
};

struct FoundEquilibrium {
  std::uint64_t profile_id = 0;  // mixed-radix encoding, auction-major
  BidProfile bids;
  EquilibriumReport report;
  Rat welfare_ratio;
};

struct SearchReport {
  std::uint64_t profiles_scanned = 0;
  std::vector<FoundEquilibrium> equilibria;  // canonical profile order
  bool has_min_ratio = false;
  Rat min_ratio;
  Rat bound;       // closed-form bound of the instance
  bool dominance;  // min_ratio >= bound (vacuously true when nothing found)
};

// Scans every grid profile, keeps the exact equilibria (gap 0, ROI exact),
// and compares the worst welfare ratio against the closed-form bound.
SearchReport enumerate_equilibria(const Instance& inst, const GridSpec& grid);

// Minimum welfare ratio over found equilibria; empty when none exists.
std::optional<Rat> empirical_poa(const Instance& inst, const GridSpec& grid);

// A finite stand-in for +inf inside grids: larger than every value and every
// grid level, so no opponent can profitably outbid it.
Rat surrogate_big(const Instance& inst, const std::vector<Rat>& levels);

}  // namespace gsp
