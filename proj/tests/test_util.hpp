#pragma once

#include <string>
#include <vector>

#include "gsp/factory.hpp"
#include "gsp/instance.hpp"

namespace gsp::testutil {

inline Rat R(const std::string& text) { return rat_from_string(text); }

inline std::vector<std::vector<Rat>> matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rat>> out;
  for (const auto& row : rows) {
    std::vector<Rat> r;
    for (const auto& cell : row) r.push_back(R(cell));
    out.push_back(std::move(r));
  }
  return out;
}

inline Instance make_instance(int n, int m, int s,
                              const std::vector<std::vector<std::string>>& values,
                              const std::vector<std::vector<std::string>>& discounts) {
  Instance inst;
  inst.n = n;
  inst.m = m;
  inst.s = s;
  inst.values = matrix(values);
  inst.discounts = matrix(discounts);
  return validate_instance(inst);
}

// "inf" allowed.
inline BidProfile make_bids(const std::vector<std::vector<std::string>>& rows) {
  BidProfile b;
  for (const auto& row : rows) {
    std::vector<ExtRat> r;
    for (const auto& cell : row) r.push_back(ext_from_string(cell));
    b.bids.push_back(std::move(r));
  }
  return b;
}

}  // namespace gsp::testutil
