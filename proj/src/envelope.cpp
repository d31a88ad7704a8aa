#include <algorithm>
#include <utility>

#include "gsp/pareto.hpp"

namespace gsp {

namespace {

Rat cross(const ParetoPoint& o, const ParetoPoint& a, const ParetoPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Signed distance surrogate from the line x = y (positive below/right).
Rat line_gap(const ParetoPoint& p) { return p.x - p.y; }

struct Crossing {
  bool found = false;
  Rat t;
  ParetoPoint a, b;
  Rat wa, wb;
};

void consider_edge(const ParetoPoint& p, const ParetoPoint& q, Crossing* best) {
  Rat fp = line_gap(p);
  Rat fq = line_gap(q);
  int sp = sgn(fp), sq = sgn(fq);
  if (sp > 0 && sq > 0) return;
  if (sp < 0 && sq < 0) return;

  Rat t;
  Rat wa, wb;
  ParetoPoint a = p, b = q;
  if (sp == 0 && sq == 0) {
    // Edge lies on the line; the nearer endpoint wins.
    if (q.x < p.x) std::swap(a, b);
    t = a.x;
    wa = 1;
    wb = 0;
  } else {
    wa = fq / (fq - fp);
    wb = 1 - wa;
    t = wa * p.x + wb * q.x;
  }
  if (!best->found || t < best->t) {
    best->found = true;
    best->t = t;
    best->a = a;
    best->b = b;
    best->wa = wa;
    best->wb = wb;
  }
}

}  // namespace

EnvelopeWitness envelope_intersection(const std::vector<ParetoPoint>& points) {
  if (points.empty()) throw input_error("envelope intersection needs at least one point");

  // Dedup by coordinates, keeping the first origin for determinism.
  std::vector<ParetoPoint> pts;
  for (const auto& p : points) {
    bool seen = false;
    for (const auto& q : pts)
      if (q.x == p.x && q.y == p.y) {
        seen = true;
        break;
      }
    if (!seen) pts.push_back(p);
  }

  std::sort(pts.begin(), pts.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });

  EnvelopeWitness w;

  if (pts.size() == 1) {
    const ParetoPoint& p = pts[0];
    if (p.x != p.y) throw input_error("pareto hull does not meet the line x = y");
    w.hull = {p};
    w.seg_a = w.seg_b = p;
    w.weight_a = 1;
    w.weight_b = 0;
    w.t_star = p.x;
    return w;
  }

  // Monotone chain; strict turns only, so collinear points stay off the lists.
  std::vector<ParetoPoint> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && sgn(cross(lower[lower.size() - 2], lower.back(), p)) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && sgn(cross(upper[upper.size() - 2], upper.back(), *it)) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }

  std::vector<ParetoPoint> polygon = lower;
  for (size_t i = 1; i + 1 < upper.size(); ++i) polygon.push_back(upper[i]);

  Crossing best;
  if (polygon.size() == 2) {
    consider_edge(polygon[0], polygon[1], &best);
  } else {
    for (size_t i = 0; i < polygon.size(); ++i)
      consider_edge(polygon[i], polygon[(i + 1) % polygon.size()], &best);
  }
  if (!best.found) throw input_error("pareto hull does not meet the line x = y");

  w.hull = lower;
  w.seg_a = best.a;
  w.seg_b = best.b;
  w.weight_a = best.wa;
  w.weight_b = best.wb;
  w.t_star = best.t;
  return w;
}

}  // namespace gsp
