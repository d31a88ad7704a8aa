#pragma once

#include <vector>

#include "gsp/instance.hpp"

namespace gsp {

// Normalized (proxy-value, payment) tradeoff point of auction j when the
// top-value bidder would land one slot past k:
//   x = d_{j,k+1} / sum_{l<=k} d_{j,l},   y = sum_{l<k} d_{j,l} / sum_{l<=k} d_{j,l}.
struct ParetoPoint {
  Rat x;
  Rat y;
  int auction;  // 0-based j
  int slot;     // 1-based k
};

std::vector<ParetoPoint> pareto_points(const Instance& inst);

// Segment of the hull boundary realizing the worst-case aggregation: the
// two endpoints, convex weights on them, and the coordinate t* where the
// weighted combination meets the line x = y.
struct EnvelopeWitness {
  std::vector<ParetoPoint> hull;  // lower-left boundary, left to right
  ParetoPoint seg_a;
  ParetoPoint seg_b;
  Rat weight_a;
  Rat weight_b;
  Rat t_star;
};

// Exact 2-D hull route, independent of the closed form: convex hull of the
// points, intersected with x = y at the smallest coordinate.
EnvelopeWitness envelope_intersection(const std::vector<ParetoPoint>& points);

struct BoundReport {
  Rat closed_form;
  Rat simplified;
  int j0;      // 0-based argmin_j d_{j,2}/d_{j,1}
  int j_star;  // 0-based auction of the minimizing term
  int k_star;  // 1-based slot of the minimizing term
  EnvelopeWitness witness;
  bool agreement;  // closed_form == witness.t_star
};

// Formula-only evaluation (no geometry). Requires s >= 2.
Rat closed_form_value(const Instance& inst, int* j0_out = nullptr, int* j_star_out = nullptr,
                      int* k_star_out = nullptr);

Rat bound_simplified(const Instance& inst, int* j_out = nullptr, int* k_out = nullptr);

// Closed form plus the independent geometric witness and agreement flag.
BoundReport bound_closed_form(const Instance& inst);

}  // namespace gsp
