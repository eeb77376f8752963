#pragma once

// Sparse polynomials in c0, c1, c3 with exact non-negative integer
// coefficients. A monomial c0^w0 c1^w1 c3^w3 encodes a multiplicity function
// whose sums hit 0, 1 and 3 exactly w0, w1 and w3 times.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "amp/errors.hpp"

namespace amp {

struct Exponent {
  std::uint32_t w0 = 0;
  std::uint32_t w1 = 0;
  std::uint32_t w3 = 0;

  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;

  friend Exponent operator+(const Exponent& x, const Exponent& y) {
    Exponent r;
    if (__builtin_add_overflow(x.w0, y.w0, &r.w0) || __builtin_add_overflow(x.w1, y.w1, &r.w1) ||
        __builtin_add_overflow(x.w3, y.w3, &r.w3)) {
      throw OverflowError("exponent overflow");
    }
    return r;
  }
};

class GenPoly {
 public:
  using Terms = std::map<Exponent, std::uint64_t>;

  GenPoly() = default;

  static GenPoly zero() { return {}; }
  static GenPoly one() { return monomial(1, 0, 0, 0); }

  static GenPoly monomial(std::uint64_t coeff, std::uint32_t w0, std::uint32_t w1, std::uint32_t w3) {
    GenPoly p;
    p.add_term(Exponent{w0, w1, w3}, coeff);
    return p;
  }

  /// Adds coeff * c^e; zero coefficients are never stored.
  void add_term(const Exponent& e, std::uint64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) it->second = detail::checked_add(it->second, coeff);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::uint64_t coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Smallest coefficient; 0 for the zero polynomial.
  std::uint64_t min_coefficient() const {
    if (terms_.empty()) return 0;
    std::uint64_t m = terms_.begin()->second;
    for (const auto& [e, c] : terms_) m = std::min(m, c);
    return m;
  }

  /// Value at c0 = c1 = c3 = 1, i.e. the total number of matchings counted.
  std::uint64_t coefficient_sum() const {
    std::uint64_t s = 0;
    for (const auto& [e, c] : terms_) s = detail::checked_add(s, c);
    return s;
  }

  GenPoly& operator+=(const GenPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  friend GenPoly operator+(GenPoly p, const GenPoly& q) { return p += q; }

  friend GenPoly operator*(const GenPoly& p, const GenPoly& q) {
    GenPoly r;
    for (const auto& [ep, cp] : p.terms_) {
      for (const auto& [eq, cq] : q.terms_) r.add_term(ep + eq, detail::checked_mul(cp, cq));
    }
    return r;
  }

  friend bool operator==(const GenPoly&, const GenPoly&) = default;

 private:
  Terms terms_;
};

inline GenPoly poly_add(const GenPoly& p, const GenPoly& q) { return p + q; }
inline GenPoly poly_mul(const GenPoly& p, const GenPoly& q) { return p * q; }

/// Canonical text: terms ascending by (w0, w1, w3), e.g. "c1^3*c3^2 + c0^2*c3^3".
inline std::string to_string(const GenPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string term;
    auto factor = [&term](const char* name, std::uint32_t w) {
      if (w == 0) return;
      if (!term.empty()) term += "*";
      term += name;
      if (w > 1) term += "^" + std::to_string(w);
    };
    factor("c0", e.w0);
    factor("c1", e.w1);
    factor("c3", e.w3);
    if (term.empty()) {
      term = std::to_string(c);
    } else if (c != 1) {
      term = std::to_string(c) + "*" + term;
    }
    out += term;
  }
  return out;
}

/// [{"w":[w0,w1,w3],"c":coeff},...] in canonical term order.
inline nlohmann::json to_json(const GenPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back({{"w", {e.w0, e.w1, e.w3}}, {"c", c}});
  }
  return arr;
}

inline GenPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ContractError("polynomial JSON must be an array");
  GenPoly p;
  for (const auto& t : j) {
    const auto& w = t.at("w");
    if (!w.is_array() || w.size() != 3) throw ContractError("term exponent must have 3 entries");
    const auto c = t.at("c").get<std::uint64_t>();
    if (c == 0) throw ContractError("zero coefficient in polynomial JSON");
    p.add_term(Exponent{w[0].get<std::uint32_t>(), w[1].get<std::uint32_t>(), w[2].get<std::uint32_t>()}, c);
  }
  return p;
}

}  // namespace amp
