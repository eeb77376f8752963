#pragma once

// Matchings between finite subsets A, B of an abelian group.
//
// A matching is a bijection f: A -> B with a + f(a) not in A for every a. Its
// multiplicity vector counts how often each sum a + f(a) occurs; a matching is
// acyclic when no other matching shares its multiplicity vector.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amp/subset.hpp"

namespace amp {

inline constexpr std::size_t kDefaultEnumerationBound = 20;
// Assignments track used B elements in a 64-bit mask.
inline constexpr std::size_t kMaxEnumerationBound = 63;

/// assignment[i] is the element of B matched to the i-th smallest element of A.
struct Matching {
  std::vector<Element> assignment;

  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// Multiplicity function restricted to its support, sorted by element.
struct MultiplicityVector {
  std::vector<std::pair<Element, std::uint64_t>> entries;

  friend auto operator<=>(const MultiplicityVector&, const MultiplicityVector&) = default;
};

inline std::string to_string(const MultiplicityVector& mv) {
  std::string out = "{";
  for (std::size_t i = 0; i < mv.entries.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(mv.entries[i].first.value) + ":" + std::to_string(mv.entries[i].second);
  }
  return out + "}";
}

inline std::string to_string(const Matching& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.assignment.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m.assignment[i].value);
  }
  return out + "]";
}

struct MultiplicityClass {
  MultiplicityVector key;
  std::uint64_t count = 0;
  Matching witness;  // first matching of the class in enumeration order
};

struct AcyclicityReport {
  std::uint64_t total_matchings = 0;
  std::vector<MultiplicityClass> classes;  // sorted by key
  std::optional<Matching> acyclic_witness;
};

inline bool is_matching(const SubsetPair& pair, std::span<const Element> assignment) {
  if (assignment.size() != pair.size()) {
    throw ContractError("assignment length " + std::to_string(assignment.size()) +
                        " does not match |A| = " + std::to_string(pair.size()));
  }
  std::vector<Element> image(assignment.begin(), assignment.end());
  std::sort(image.begin(), image.end());
  if (image != pair.b().elements()) return false;
  const GroupCtx& g = pair.group();
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (pair.a().contains(g.add(pair.a()[i], assignment[i]))) return false;
  }
  return true;
}

inline bool is_matching(const SubsetPair& pair, const Matching& m) {
  return is_matching(pair, std::span<const Element>(m.assignment));
}

namespace detail {

inline MultiplicityVector multiplicity_of_sums(std::vector<Element> sums) {
  std::sort(sums.begin(), sums.end());
  MultiplicityVector mv;
  for (Element s : sums) {
    if (!mv.entries.empty() && mv.entries.back().first == s) {
      ++mv.entries.back().second;
    } else {
      mv.entries.emplace_back(s, 1);
    }
  }
  return mv;
}

// Compatibility lists: candidates[i] holds, ascending, the indices j of B with
// a_i + b_j not in A; sums[i][k] is the corresponding sum.
struct Compatibility {
  std::vector<std::vector<std::uint32_t>> candidates;
  std::vector<std::vector<Element>> sums;
};

inline Compatibility compatibility(const SubsetPair& pair) {
  const GroupCtx& g = pair.group();
  const std::size_t k = pair.size();
  Compatibility c;
  c.candidates.resize(k);
  c.sums.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element s = g.add(pair.a()[i], pair.b()[j]);
      if (!pair.a().contains(s)) {
        c.candidates[i].push_back(static_cast<std::uint32_t>(j));
        c.sums[i].push_back(s);
      }
    }
  }
  return c;
}

inline void check_enumeration_bound(const SubsetPair& pair, std::size_t bound) {
  if (bound > kMaxEnumerationBound) {
    throw ResourceError("enumeration bound " + std::to_string(bound) + " exceeds hard limit " +
                        std::to_string(kMaxEnumerationBound));
  }
  if (pair.size() > bound) {
    throw ResourceError("|A| = " + std::to_string(pair.size()) +
                        " exceeds the enumeration bound " + std::to_string(bound));
  }
}

// Depth-first over A in ascending order, trying partners in ascending B order,
// so matchings arrive in lexicographic order of their assignment. `visit`
// receives, per A index, the chosen position within candidates[i].
template <class Visit>
void for_each_choice(const Compatibility& c, Visit&& visit) {
  const std::size_t k = c.candidates.size();
  for (const auto& row : c.candidates) {
    if (row.empty()) return;
  }
  std::vector<std::uint32_t> choice(k, 0);
  std::uint64_t used = 0;
  std::size_t depth = 0;
  // choice[depth] is the next candidate position to try at this depth.
  while (true) {
    if (depth == k) {
      visit(std::span<const std::uint32_t>(choice));
      // Backtrack from a full assignment.
      if (k == 0) return;
      --depth;
      used &= ~(std::uint64_t{1} << c.candidates[depth][choice[depth]]);
      ++choice[depth];
      continue;
    }
    const auto& row = c.candidates[depth];
    std::uint32_t pos = choice[depth];
    while (pos < row.size() && (used >> row[pos] & 1U)) ++pos;
    if (pos < row.size()) {
      choice[depth] = pos;
      used |= std::uint64_t{1} << row[pos];
      ++depth;
      if (depth < k) choice[depth] = 0;
      continue;
    }
    if (depth == 0) return;
    --depth;
    used &= ~(std::uint64_t{1} << c.candidates[depth][choice[depth]]);
    ++choice[depth];
  }
}

}  // namespace detail

inline MultiplicityVector multiplicity(const SubsetPair& pair, const Matching& m) {
  if (m.assignment.size() != pair.size()) {
    throw ContractError("matching does not belong to this pair");
  }
  std::vector<Element> sums;
  sums.reserve(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) {
    sums.push_back(pair.group().add(pair.a()[i], m.assignment[i]));
  }
  return detail::multiplicity_of_sums(std::move(sums));
}

/// Perfect-matching existence in the compatibility graph (edge a-b iff
/// a + b not in A), via augmenting paths.
inline bool matching_exists(const SubsetPair& pair) {
  const auto c = detail::compatibility(pair);
  const std::size_t k = pair.size();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(k, kFree);  // B index -> A index
  std::vector<char> seen(k);

  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::uint32_t j : c.candidates[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (owner[j] == kFree || self(self, owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };

  for (std::size_t i = 0; i < k; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(augment, i)) return false;
  }
  return true;
}

/// Calls `visit(const Matching&)` for every matching, in lexicographic order
/// of assignment.
template <class Visit>
void for_each_matching(const SubsetPair& pair, Visit&& visit,
                       std::size_t bound = kDefaultEnumerationBound) {
  detail::check_enumeration_bound(pair, bound);
  const auto c = detail::compatibility(pair);
  Matching m;
  m.assignment.resize(pair.size());
  detail::for_each_choice(c, [&](std::span<const std::uint32_t> choice) {
    for (std::size_t i = 0; i < choice.size(); ++i) {
      m.assignment[i] = pair.b()[c.candidates[i][choice[i]]];
    }
    visit(static_cast<const Matching&>(m));
  });
}

inline std::vector<Matching> enumerate_matchings(const SubsetPair& pair,
                                                 std::size_t bound = kDefaultEnumerationBound) {
  std::vector<Matching> out;
  for_each_matching(pair, [&](const Matching& m) { out.push_back(m); }, bound);
  return out;
}

inline std::uint64_t count_matchings(const SubsetPair& pair,
                                     std::size_t bound = kDefaultEnumerationBound) {
  detail::check_enumeration_bound(pair, bound);
  std::uint64_t total = 0;
  detail::for_each_choice(detail::compatibility(pair),
                          [&](std::span<const std::uint32_t>) { total = detail::checked_add(total, std::uint64_t{1}); });
  return total;
}

/// Buckets every matching by multiplicity vector. The acyclic witness is the
/// witness of the first singleton class in key order.
inline AcyclicityReport acyclicity_report(const SubsetPair& pair,
                                          std::size_t bound = kDefaultEnumerationBound) {
  detail::check_enumeration_bound(pair, bound);
  const auto c = detail::compatibility(pair);
  struct Bucket {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> first_choice;
  };
  std::map<MultiplicityVector, Bucket> buckets;
  std::uint64_t total = 0;
  std::vector<Element> sums(pair.size());

  detail::for_each_choice(c, [&](std::span<const std::uint32_t> choice) {
    for (std::size_t i = 0; i < choice.size(); ++i) sums[i] = c.sums[i][choice[i]];
    auto [it, inserted] = buckets.try_emplace(detail::multiplicity_of_sums(sums));
    if (inserted) it->second.first_choice.assign(choice.begin(), choice.end());
    it->second.count = detail::checked_add(it->second.count, std::uint64_t{1});
    total = detail::checked_add(total, std::uint64_t{1});
  });

  AcyclicityReport report;
  report.total_matchings = total;
  report.classes.reserve(buckets.size());
  for (auto& [key, bucket] : buckets) {
    MultiplicityClass cls;
    cls.key = key;
    cls.count = bucket.count;
    cls.witness.assignment.reserve(pair.size());
    for (std::size_t i = 0; i < pair.size(); ++i) {
      cls.witness.assignment.push_back(pair.b()[c.candidates[i][bucket.first_choice[i]]]);
    }
    if (cls.count == 1 && !report.acyclic_witness) report.acyclic_witness = cls.witness;
    report.classes.push_back(std::move(cls));
  }
  return report;
}

/// Class sizes sorted ascending; invariant under unit scaling of the pair.
inline std::vector<std::uint64_t> class_size_multiset(const AcyclicityReport& r) {
  std::vector<std::uint64_t> sizes;
  sizes.reserve(r.classes.size());
  for (const auto& cls : r.classes) sizes.push_back(cls.count);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace amp
