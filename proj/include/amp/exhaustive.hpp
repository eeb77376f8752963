#pragma once

// Exhaustive acyclic-matching-property checks over small cyclic groups, and
// seeded sampling of finite subsets of Z.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "amp/matching.hpp"

namespace amp {

inline constexpr std::int64_t kDefaultExhaustiveGroupBound = 8;

struct AmpResult {
  bool holds = true;
  std::optional<SubsetPair> counterexample;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_skipped = 0;  // non-canonical under unit scaling
  std::uint64_t total_matchings = 0;
  std::string digest;
};

namespace detail {

// 64-bit FNV-1a, used to fingerprint an exhaustive run.
class Fnv1a {
 public:
  void mix(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= (v >> (8 * i)) & 0xffU;
      state_ *= 0x100000001b3ULL;
    }
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
    return buf;
  }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

// Advances `c` to the next k-combination of [lo, hi) in lexicographic order.
inline bool next_combination(std::vector<std::int64_t>& c, std::int64_t /*lo*/, std::int64_t hi) {
  const auto k = static_cast<std::int64_t>(c.size());
  for (std::int64_t i = k - 1; i >= 0; --i) {
    if (c[i] < hi - (k - i)) {
      ++c[i];
      for (std::int64_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::int64_t> first_combination(std::size_t k, std::int64_t lo) {
  std::vector<std::int64_t> c(k);
  std::iota(c.begin(), c.end(), lo);
  return c;
}

inline std::vector<std::int64_t> scaled_sorted(const std::vector<std::int64_t>& s, std::int64_t u,
                                               std::int64_t n) {
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (std::int64_t v : s) out.push_back(v * u % n);
  std::sort(out.begin(), out.end());
  return out;
}

// True iff (A, B) is the least element of its orbit under simultaneous unit
// scaling, in (lex A, lex B) order.
inline bool is_orbit_minimum(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                             const std::vector<std::int64_t>& unit_list, std::int64_t n) {
  for (std::int64_t u : unit_list) {
    if (u == 1) continue;
    auto ua = scaled_sorted(a, u, n);
    if (ua < a) return false;
    if (ua == a && scaled_sorted(b, u, n) < b) return false;
  }
  return true;
}

inline std::uint64_t mask_of(const std::vector<std::int64_t>& s) {
  std::uint64_t m = 0;
  for (std::int64_t v : s) m |= std::uint64_t{1} << v;
  return m;
}

inline void check_group_bound(const GroupCtx& g, std::int64_t group_bound) {
  if (!g.is_cyclic()) throw ContractError("exhaustive checks need a cyclic group");
  if (group_bound > 62) throw ResourceError("exhaustive group bound above hard limit 62");
  if (g.modulus() > group_bound) {
    throw ResourceError("group order " + std::to_string(g.modulus()) +
                        " exceeds the exhaustive bound " + std::to_string(group_bound));
  }
}

// Visits valid pairs of Z/nZ with |A| in [k_lo, k_hi], ordered by
// (|A|, lex A, lex B). `visit` returns false to stop.
template <class Visit>
void for_each_cyclic_pair(std::int64_t n, std::size_t k_lo, std::size_t k_hi, Visit&& visit) {
  const auto max_k = static_cast<std::size_t>(n - 1);
  for (std::size_t k = std::max<std::size_t>(k_lo, 1); k <= std::min(k_hi, max_k); ++k) {
    auto a = first_combination(k, 0);
    do {
      auto b = first_combination(k, 1);
      do {
        if (!visit(a, b)) return;
      } while (next_combination(b, 1, n));
    } while (next_combination(a, 0, n));
  }
}

}  // namespace detail

/// Checks every valid (A, B) of a cyclic group for an acyclic matching.
/// With `use_symmetry`, only orbit minima under A -> uA, B -> uB are checked;
/// the first counterexample is the same either way, since the first failing
/// pair in (|A|, lex A, lex B) order is always the least of its orbit.
inline AmpResult verify_group_amp(const GroupCtx& g, bool use_symmetry,
                                  std::int64_t group_bound = kDefaultExhaustiveGroupBound) {
  detail::check_group_bound(g, group_bound);
  const std::int64_t n = g.modulus();
  const auto unit_list = units(g);
  AmpResult result;
  detail::Fnv1a digest;
  digest.mix(static_cast<std::uint64_t>(n));
  digest.mix(use_symmetry ? 1 : 0);

  detail::for_each_cyclic_pair(
      n, 1, static_cast<std::size_t>(n), [&](const auto& a, const auto& b) {
        if (use_symmetry && !detail::is_orbit_minimum(a, b, unit_list, n)) {
          ++result.pairs_skipped;
          return true;
        }
        const auto pair = SubsetPair::make(g, a, b);
        const auto report = acyclicity_report(pair, kMaxEnumerationBound);
        ++result.pairs_checked;
        result.total_matchings = detail::checked_add(result.total_matchings, report.total_matchings);
        digest.mix(detail::mask_of(a));
        digest.mix(detail::mask_of(b));
        digest.mix(report.total_matchings);
        digest.mix(report.classes.size());
        if (!report.acyclic_witness) {
          result.holds = false;
          result.counterexample = pair;
          return false;
        }
        return true;
      });
  result.digest = digest.hex();
  return result;
}

/// True iff every valid pair with |A| in {n-1, n-2} has an acyclic matching.
namespace detail {

// Visits every valid pair with |A| in {n-2, n-1}; stops when visit returns false.
template <class Visit>
bool for_each_large_pair(const GroupCtx& g, std::int64_t group_bound, Visit&& visit) {
  check_group_bound(g, group_bound);
  const std::int64_t n = g.modulus();
  if (n < 3) throw ContractError("large_set_check needs n >= 3");
  bool ok = true;
  for_each_cyclic_pair(n, static_cast<std::size_t>(n - 2), static_cast<std::size_t>(n - 1),
                       [&](const auto& a, const auto& b) {
                         ok = visit(acyclicity_report(SubsetPair::make(g, a, b), kMaxEnumerationBound));
                         return ok;
                       });
  return ok;
}

}  // namespace detail

/// True iff every valid pair with |A| in {n-1, n-2} has an acyclic matching.
/// Fails for even n: there such pairs can admit no matching at all.
inline bool large_set_check(const GroupCtx& g, std::int64_t group_bound = kDefaultExhaustiveGroupBound) {
  return detail::for_each_large_pair(g, group_bound,
                                     [](const AcyclicityReport& r) { return r.acyclic_witness.has_value(); });
}

/// True iff every such pair that admits a matching also admits an acyclic one.
inline bool large_set_check_matched(const GroupCtx& g,
                                    std::int64_t group_bound = kDefaultExhaustiveGroupBound) {
  return detail::for_each_large_pair(g, group_bound, [](const AcyclicityReport& r) {
    return r.total_matchings == 0 || r.acyclic_witness.has_value();
  });
}

// ---------------------------------------------------------------------------
// Finite subsets of Z

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct IntegerSampleSpec {
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 500;
  std::size_t max_size = 5;
  std::int64_t range = 6;  // elements drawn from [-range, range]
};

struct IntegerSampleResult {
  std::uint64_t samples = 0;
  std::uint64_t total_matchings = 0;
  bool all_acyclic = true;
  std::optional<SubsetPair> first_failure;
};

/// Deterministic stream of random valid pairs A, B of Z for a given spec.
class IntegerPairSampler {
 public:
  explicit IntegerPairSampler(const IntegerSampleSpec& spec) : spec_(spec), rng_(spec.seed) {
    if (spec.range < 1 || spec.max_size < 1 ||
        spec.max_size > static_cast<std::size_t>(2 * spec.range)) {
      throw ContractError("integer sample spec cannot produce valid pairs");
    }
    for (std::int64_t v = -spec.range; v <= spec.range; ++v) {
      pool_a_.push_back(v);
      if (v != 0) pool_b_.push_back(v);
    }
  }

  SubsetPair next() {
    std::uniform_int_distribution<std::size_t> size_dist(1, spec_.max_size);
    const std::size_t k = size_dist(rng_);
    std::shuffle(pool_a_.begin(), pool_a_.end(), rng_);
    std::shuffle(pool_b_.begin(), pool_b_.end(), rng_);
    std::vector<std::int64_t> a(pool_a_.begin(), pool_a_.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::int64_t> b(pool_b_.begin(), pool_b_.begin() + static_cast<std::ptrdiff_t>(k));
    return SubsetPair::make(GroupCtx::integers(), a, b);
  }

 private:
  IntegerSampleSpec spec_;
  std::mt19937_64 rng_;
  std::vector<std::int64_t> pool_a_;
  std::vector<std::int64_t> pool_b_;
};

inline IntegerSampleResult verify_integer_sample(const IntegerSampleSpec& spec,
                                                 std::size_t bound = kDefaultEnumerationBound) {
  IntegerPairSampler sampler(spec);
  IntegerSampleResult result;
  for (std::uint64_t i = 0; i < spec.samples; ++i) {
    const auto pair = sampler.next();
    const auto report = acyclicity_report(pair, bound);
    ++result.samples;
    result.total_matchings = detail::checked_add(result.total_matchings, report.total_matchings);
    if (!report.acyclic_witness && result.all_acyclic) {
      result.all_acyclic = false;
      result.first_failure = pair;
    }
  }
  return result;
}

}  // namespace amp
