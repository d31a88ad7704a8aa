#include "gsp/pareto.hpp"

#include <string>

namespace gsp {

std::vector<ParetoPoint> pareto_points(const Instance& inst) {
  std::vector<ParetoPoint> pts;
  pts.reserve(static_cast<size_t>(inst.m) * inst.s);
  for (int j = 0; j < inst.m; ++j) {
    Rat prefix(0);  // sum_{l<k} d_{j,l}
    for (int k = 1; k <= inst.s; ++k) {
      Rat total = prefix + inst.discount(j, k);  // sum_{l<=k}
      ParetoPoint p;
      p.x = inst.discount(j, k + 1) / total;
      p.y = prefix / total;
      p.auction = j;
      p.slot = k;
      pts.push_back(std::move(p));
      prefix = total;
    }
  }
  return pts;
}

Rat closed_form_value(const Instance& inst, int* j0_out, int* j_star_out, int* k_star_out) {
  if (inst.s < 2)
    throw input_error("closed-form bound requires s >= 2; the minimum ranges over k in {2,...,s}");

  int j0 = 0;
  for (int j = 1; j < inst.m; ++j) {
    // d_{j,2}/d_{j,1} < d_{j0,2}/d_{j0,1}, cross-multiplied (ties keep smaller j).
    if (inst.discount(j, 2) * inst.discount(j0, 1) < inst.discount(j0, 2) * inst.discount(j, 1))
      j0 = j;
  }
  if (j0_out) *j0_out = j0;

  const Rat d01 = inst.discount(j0, 1);
  const Rat d02 = inst.discount(j0, 2);

  if (sgn(d02) == 0) {
    // q^{j0,1} = (0,0) sits on x = y; the intersection collapses to 0.
    if (j_star_out) *j_star_out = j0;
    if (k_star_out) *k_star_out = 2;
    return Rat(0);
  }

  bool have = false;
  Rat best(0);
  int bj = 0, bk = 2;
  for (int j = 0; j < inst.m; ++j) {
    Rat prefix = inst.discount(j, 1);  // sum_{l<k} at k=2
    for (int k = 2; k <= inst.s; ++k) {
      Rat total = prefix + inst.discount(j, k);
      Rat num = d02 * prefix;
      Rat den = d01 * prefix - d01 * inst.discount(j, k + 1) + d02 * total;
      Rat candidate = num / den;
      if (!have || candidate < best) {
        have = true;
        best = candidate;
        bj = j;
        bk = k;
      }
      prefix = total;
    }
  }
  if (j_star_out) *j_star_out = bj;
  if (k_star_out) *k_star_out = bk;
  return best;
}

Rat bound_simplified(const Instance& inst, int* j_out, int* k_out) {
  bool have = false;
  Rat best(0);
  int bj = 0, bk = 1;
  for (int j = 0; j < inst.m; ++j) {
    Rat prefix(0);
    for (int k = 1; k <= inst.s; ++k) {
      Rat total = prefix + inst.discount(j, k);
      Rat candidate = (prefix + inst.discount(j, k + 1)) / (2 * total);
      if (!have || candidate < best) {
        have = true;
        best = candidate;
        bj = j;
        bk = k;
      }
      prefix = total;
    }
  }
  if (j_out) *j_out = bj;
  if (k_out) *k_out = bk;
  return best;
}

BoundReport bound_closed_form(const Instance& inst) {
  BoundReport report;
  report.closed_form = closed_form_value(inst, &report.j0, &report.j_star, &report.k_star);
  report.simplified = bound_simplified(inst);
  report.witness = envelope_intersection(pareto_points(inst));
  report.agreement = report.closed_form == report.witness.t_star;
  return report;
}

}  // namespace gsp
