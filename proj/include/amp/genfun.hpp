#pragma once

// Generating functions counting matchings from A = Z/nZ \ {0,1,3} to
// B = Z/nZ \ {0,1,m}, keyed by multiplicity (c0^w0 c1^w1 c3^w3).
//
// Three routes compute the same polynomial: a transfer-matrix product over
// the ascending-order matching automaton, direct enumeration, and binomial
// closed forms for m = 2 and m = 6.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "amp/matching.hpp"
#include "amp/poly.hpp"

namespace amp {

using PolyRow = std::array<GenPoly, 3>;
using TransferMatrix = std::array<std::array<GenPoly, 3>, 3>;

namespace detail {

inline GenPoly mono(std::uint32_t w0, std::uint32_t w1, std::uint32_t w3) {
  return GenPoly::monomial(1, w0, w1, w3);
}

inline PolyRow row_times(const PolyRow& row, const TransferMatrix& mat) {
  PolyRow out;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!row[i].is_zero() && !mat[i][j].is_zero()) out[j] += row[i] * mat[i][j];
    }
  }
  return out;
}

}  // namespace detail

/// Transitions for b = m+1 .. n-4 over the states (s12, s13, s23).
inline TransferMatrix tail_transfer_matrix() {
  using detail::mono;
  return {{{GenPoly{}, mono(0, 0, 1), GenPoly{}},
           {mono(0, 1, 0), GenPoly{}, mono(0, 0, 1)},
           {mono(1, 0, 0), GenPoly{}, GenPoly{}}}};
}

/// Transitions for b = 2 .. m-1 over the states (s1, s2, s3).
inline TransferMatrix head_transfer_matrix() {
  using detail::mono;
  return {{{mono(0, 1, 0), GenPoly{}, mono(0, 0, 1)},
           {mono(1, 0, 0), GenPoly{}, GenPoly{}},
           {GenPoly{}, mono(1, 0, 0), GenPoly{}}}};
}

/// Weights of the forced final matchings of {n-3, n-2, n-1} from s12, s13, s23.
inline PolyRow final_weights() {
  using detail::mono;
  return {mono(0, 2, 1), mono(1, 0, 2), mono(0, 1, 2)};
}

/// row(final) * T^(n-m-4) * diag(1,1,0) * H^(m-2) * e1, with T the tail and
/// H the head matrix. Requires m > 1 and n >= m + 4.
inline GenPoly transfer_genfun(std::int64_t n, std::int64_t m) {
  if (m <= 1 || n < m + 4) {
    throw ContractError("transfer_genfun needs m > 1 and n >= m + 4 (n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");
  }
  PolyRow row = final_weights();
  const auto tail = tail_transfer_matrix();
  for (std::int64_t i = 0; i < n - m - 4; ++i) row = detail::row_times(row, tail);
  row[2] = GenPoly{};  // s3 has no successor once m is skipped
  const auto head = head_transfer_matrix();
  for (std::int64_t i = 0; i < m - 2; ++i) row = detail::row_times(row, head);
  return row[0];
}

/// The pair A = Z/nZ \ {0,1,3}, B = Z/nZ \ {0,1,m}.
inline SubsetPair construction_pair(std::int64_t n, std::int64_t m) {
  if (m <= 1 || n <= std::max<std::int64_t>(m, 3)) {
    throw ContractError("construction needs m > 1 and n > max(m, 3) (n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");
  }
  const auto g = GroupCtx::cyclic(n);
  return SubsetPair::make(g, cyclic_complement(n, {0, 1, 3}), cyclic_complement(n, {0, 1, m}));
}

/// Enumerates every matching of construction_pair(n, m) and aggregates the
/// monomials of their multiplicity functions.
inline GenPoly brute_genfun(std::int64_t n, std::int64_t m,
                            std::size_t bound = kDefaultEnumerationBound) {
  const auto pair = construction_pair(n, m);
  detail::check_enumeration_bound(pair, bound);
  const auto compat = detail::compatibility(pair);
  GenPoly out;
  detail::for_each_choice(compat, [&](std::span<const std::uint32_t> choice) {
    Exponent e;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      switch (compat.sums[i][choice[i]].value) {
        case 0: ++e.w0; break;
        case 1: ++e.w1; break;
        case 3: ++e.w3; break;
        default:
          throw VerificationFailure("sum outside {0,1,3} in construction matching");
      }
    }
    out.add_term(e, 1);
  });
  return out;
}

/// binom(a, b), zero when a < 0, b < 0 or b > a.
inline std::uint64_t binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  unsigned __int128 r = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    r = r * static_cast<unsigned __int128>(a - i) / static_cast<unsigned __int128>(i + 1);
    if (r > UINT64_MAX) {
      throw OverflowError("binomial(" + std::to_string(a) + ", " + std::to_string(b) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

/// Sum of coeff(w0, w1, w3) c0^w0 c1^w1 c3^w3 over non-negative solutions of
/// w0 + w1 + w3 = n - 3 and 2 w0 + w1 + 1 = w3 + m.
template <class Coeff>
GenPoly constrained_sum(std::int64_t n, std::int64_t m, Coeff&& coeff) {
  GenPoly out;
  const std::int64_t total = n - 3;
  for (std::int64_t w0 = 0; w0 <= total; ++w0) {
    for (std::int64_t w1 = 0; w0 + w1 <= total; ++w1) {
      const std::int64_t w3 = total - w0 - w1;
      if (2 * w0 + w1 + 1 != w3 + m) continue;
      out.add_term(Exponent{static_cast<std::uint32_t>(w0), static_cast<std::uint32_t>(w1),
                            static_cast<std::uint32_t>(w3)},
                   coeff(w0, w1, w3));
    }
  }
  return out;
}

/// sum binom(w0+w1-d, w1-e) c0^w0 c1^w1 c3^w3 under the two constraints.
inline GenPoly binomial_family(std::int64_t n, std::int64_t d, std::int64_t e, std::int64_t m) {
  if (m < 2 || n < 3) throw ContractError("binomial_family needs m >= 2 and n >= 3");
  return constrained_sum(n, m, [d, e](std::int64_t w0, std::int64_t w1, std::int64_t) {
    return binomial(w0 + w1 - d, w1 - e);
  });
}

inline GenPoly closed_form_m2(std::int64_t n) {
  if (n < 6) throw ContractError("closed_form_m2 needs n >= 6");
  return constrained_sum(n, 2, [](std::int64_t w0, std::int64_t w1, std::int64_t) {
    return binomial(w0 + w1, w1);
  });
}

inline GenPoly closed_form_m6(std::int64_t n) {
  if (n < 10) throw ContractError("closed_form_m6 needs n >= 10");
  return constrained_sum(n, 6, [](std::int64_t w0, std::int64_t w1, std::int64_t) {
    return detail::checked_add(
        detail::checked_add(binomial(w0 + w1 - 2, w1), binomial(w0 + w1 - 3, w1 - 1)),
        binomial(w0 + w1 - 3, w1 - 3));
  });
}

/// Closed form for m in {2, 6}.
inline bool has_closed_form(std::int64_t n, std::int64_t m) {
  return (m == 2 && n >= 6) || (m == 6 && n >= 10);
}

inline GenPoly closed_form(std::int64_t n, std::int64_t m) {
  if (m == 2) return closed_form_m2(n);
  if (m == 6) return closed_form_m6(n);
  throw ContractError("no closed form for m = " + std::to_string(m));
}

/// seq[i] = c1 c3 seq[i-2] + c0 c3^2 seq[i-3] for every i >= 3, i.e. the
/// sequence follows the characteristic polynomial x^3 - c1 c3 x - c0 c3^2.
inline bool recurrence_check(std::span<const GenPoly> seq) {
  if (seq.size() < 4) throw ContractError("recurrence_check needs at least 4 terms");
  const GenPoly c1c3 = GenPoly::monomial(1, 0, 1, 1);
  const GenPoly c0c3sq = GenPoly::monomial(1, 1, 0, 2);
  for (std::size_t i = 3; i < seq.size(); ++i) {
    if (seq[i] != c1c3 * seq[i - 2] + c0c3sq * seq[i - 3]) return false;
  }
  return true;
}

/// Per-term residues of the two exponent constraints; all zero for any
/// polynomial produced by the routes above.
inline bool satisfies_constraints(const GenPoly& p, std::int64_t n, std::int64_t m) {
  for (const auto& [e, c] : p.terms()) {
    const std::int64_t w0 = e.w0, w1 = e.w1, w3 = e.w3;
    if (w0 + w1 + w3 != n - 3 || 2 * w0 + w1 + 1 != w3 + m) return false;
  }
  return true;
}

}  // namespace amp
