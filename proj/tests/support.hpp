#pragma once

#include "amp/poly.hpp"
#include "oracle.hpp"

inline oracle::Poly to_oracle(const amp::GenPoly& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[{e.w0, e.w1, e.w3}] = c;
  return out;
}

inline std::vector<std::int64_t> values(const std::vector<amp::Element>& v) {
  std::vector<std::int64_t> out;
  for (auto e : v) out.push_back(e.value);
  return out;
}
