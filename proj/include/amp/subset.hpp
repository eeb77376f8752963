#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "amp/group.hpp"

namespace amp {

/// Sorted set of group elements with O(1) membership.
///
/// Membership is a byte bitmap over [min, max] of the stored elements; in
/// cyclic mode that range sits inside [0, n).
class ElementSet {
 public:
  ElementSet() = default;

  /// `elems` must be sorted ascending and duplicate free.
  explicit ElementSet(std::vector<Element> elems) : elems_(std::move(elems)) {
    if (!std::is_sorted(elems_.begin(), elems_.end()) ||
        std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
      throw ContractError("ElementSet requires sorted, distinct elements");
    }
    if (elems_.empty()) return;
    offset_ = elems_.front().value;
    const auto span = static_cast<std::uint64_t>(elems_.back().value - offset_) + 1;
    if (span > (std::uint64_t{1} << 26)) {
      throw ResourceError("ElementSet range too wide for a membership bitmap");
    }
    bitmap_.assign(span, 0);
    for (Element e : elems_) bitmap_[static_cast<std::size_t>(e.value - offset_)] = 1;
  }

  bool contains(Element x) const {
    if (elems_.empty() || x.value < offset_) return false;
    const auto i = static_cast<std::uint64_t>(x.value - offset_);
    return i < bitmap_.size() && bitmap_[i] != 0;
  }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  Element operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Element>& elements() const { return elems_; }

  friend bool operator==(const ElementSet& x, const ElementSet& y) { return x.elems_ == y.elems_; }
  friend auto operator<=>(const ElementSet& x, const ElementSet& y) { return x.elems_ <=> y.elems_; }

 private:
  std::vector<Element> elems_;
  std::int64_t offset_ = 0;
  std::vector<unsigned char> bitmap_;
};

inline std::string to_string(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i].value);
  }
  return out + "}";
}

/// One verification instance: equal-size nonempty A, B with 0 not in B.
class SubsetPair {
 public:
  /// Values are reduced to canonical form first; duplicates after reduction
  /// are rejected.
  static SubsetPair make(const GroupCtx& g, std::span<const std::int64_t> a,
                         std::span<const std::int64_t> b) {
    return SubsetPair(g, canonical_set(g, a, "A"), canonical_set(g, b, "B"));
  }

  static SubsetPair make(const GroupCtx& g, std::initializer_list<std::int64_t> a,
                         std::initializer_list<std::int64_t> b) {
    return make(g, std::span<const std::int64_t>(a.begin(), a.size()),
                std::span<const std::int64_t>(b.begin(), b.size()));
  }

  SubsetPair(const GroupCtx& g, ElementSet a, ElementSet b)
      : group_(g), a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty()) throw ContractError("A must be nonempty");
    if (a_.size() != b_.size()) {
      throw ContractError("|A| != |B|: " + std::to_string(a_.size()) + " vs " +
                          std::to_string(b_.size()));
    }
    if (b_.contains(Element{0})) throw ContractError("0 must not lie in B");
    for (const ElementSet* s : {&a_, &b_}) {
      for (Element e : *s) {
        if (!group_.is_canonical(e)) {
          throw ContractError("element " + std::to_string(e.value) + " not canonical in " +
                              group_.describe());
        }
      }
    }
  }

  const GroupCtx& group() const { return group_; }
  const ElementSet& a() const { return a_; }
  const ElementSet& b() const { return b_; }
  std::size_t size() const { return a_.size(); }

  /// (uA, uB) for a unit u of a cyclic group.
  SubsetPair scaled(std::int64_t u) const {
    return SubsetPair(group_, scale_set(u, a_), scale_set(u, b_));
  }

  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;

 private:
  static ElementSet canonical_set(const GroupCtx& g, std::span<const std::int64_t> values,
                                  const char* name) {
    std::vector<Element> out;
    out.reserve(values.size());
    for (std::int64_t v : values) out.push_back(g.canonical(v));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
      throw ContractError(std::string("duplicate element in ") + name);
    }
    return ElementSet(std::move(out));
  }

  ElementSet scale_set(std::int64_t u, const ElementSet& s) const {
    std::vector<Element> out;
    out.reserve(s.size());
    for (Element e : s) out.push_back(group_.scale(u, e));
    std::sort(out.begin(), out.end());
    return ElementSet(std::move(out));
  }

  GroupCtx group_;
  ElementSet a_;
  ElementSet b_;
};

inline std::string to_string(const SubsetPair& p) {
  return p.group().describe() + " A=" + to_string(p.a()) + " B=" + to_string(p.b());
}

inline std::vector<std::int64_t> values_of(const ElementSet& s) {
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (Element e : s) out.push_back(e.value);
  return out;
}

/// Z/nZ minus the listed residues, as a sorted vector.
inline std::vector<std::int64_t> cyclic_complement(std::int64_t n,
                                                   std::initializer_list<std::int64_t> removed) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0; v < n; ++v) {
    bool skip = false;
    for (std::int64_t r : removed) skip = skip || (((r % n) + n) % n == v);
    if (!skip) out.push_back(v);
  }
  return out;
}

}  // namespace amp
