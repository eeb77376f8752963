#pragma once

// Ambient abelian groups: the cyclic group Z/nZ and the integers Z.

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "amp/errors.hpp"

namespace amp {

/// A group element. For Z/nZ the value is the canonical residue in [0, n);
/// for Z it is the integer itself.
struct Element {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

class GroupCtx {
 public:
  enum class Kind { cyclic, integers };

  // Largest modulus accepted for Z/nZ. Anything in scope is far smaller.
  static constexpr std::int64_t kMaxModulus = std::int64_t{1} << 24;
  static constexpr std::int64_t kDefaultIntegerLimit = std::int64_t{1} << 30;

  static GroupCtx cyclic(std::int64_t n) {
    if (n < 1 || n > kMaxModulus) {
      throw ContractError("cyclic group order must lie in [1, " + std::to_string(kMaxModulus) +
                          "], got " + std::to_string(n));
    }
    return GroupCtx(Kind::cyclic, n);
  }

  /// Z with every element magnitude bounded by `magnitude_limit`.
  static GroupCtx integers(std::int64_t magnitude_limit = kDefaultIntegerLimit) {
    if (magnitude_limit < 1) {
      throw ContractError("integer magnitude limit must be positive");
    }
    return GroupCtx(Kind::integers, magnitude_limit);
  }

  Kind kind() const { return kind_; }
  bool is_cyclic() const { return kind_ == Kind::cyclic; }

  std::int64_t modulus() const {
    if (!is_cyclic()) throw ContractError("the integers have no modulus");
    return param_;
  }

  std::int64_t magnitude_limit() const {
    if (is_cyclic()) throw ContractError("cyclic groups have no magnitude limit");
    return param_;
  }

  /// Canonical representative of an arbitrary integer.
  Element canonical(std::int64_t v) const {
    if (is_cyclic()) {
      std::int64_t r = v % param_;
      if (r < 0) r += param_;
      return Element{r};
    }
    check_magnitude(v);
    return Element{v};
  }

  bool is_canonical(Element x) const {
    if (is_cyclic()) return x.value >= 0 && x.value < param_;
    return x.value >= -param_ && x.value <= param_;
  }

  Element add(Element x, Element y) const {
    if (is_cyclic()) {
      std::int64_t s = x.value + y.value;  // both < 2^24
      if (s >= param_) s -= param_;
      return Element{s};
    }
    return canonical(detail::checked_add(x.value, y.value));
  }

  Element neg(Element x) const {
    if (is_cyclic()) return Element{x.value == 0 ? 0 : param_ - x.value};
    return canonical(-x.value);
  }

  /// u·x, the image of x under multiplication by the integer u.
  Element scale(std::int64_t u, Element x) const {
    if (is_cyclic()) {
      return canonical(detail::checked_mul(canonical(u).value, x.value) % param_);
    }
    return canonical(detail::checked_mul(u, x.value));
  }

  /// "Z/7Z" or "Z".
  std::string describe() const {
    if (is_cyclic()) return "Z/" + std::to_string(param_) + "Z";
    return "Z";
  }

  friend bool operator==(const GroupCtx&, const GroupCtx&) = default;

 private:
  GroupCtx(Kind kind, std::int64_t param) : kind_(kind), param_(param) {}

  void check_magnitude(std::int64_t v) const {
    if (v > param_ || v < -param_) {
      throw OverflowError("integer element " + std::to_string(v) + " exceeds magnitude limit " +
                          std::to_string(param_));
    }
  }

  Kind kind_;
  std::int64_t param_;
};

/// The cyclic subgroup <a> = {0, a, 2a, ...}, sorted ascending.
inline std::vector<Element> subgroup_generated(const GroupCtx& g, Element a) {
  const std::int64_t n = g.modulus();
  const std::int64_t d = std::gcd(g.canonical(a.value).value, n);  // gcd(0, n) = n
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(n / d));
  for (std::int64_t v = 0; v < n; v += d) out.push_back(Element{v});
  return out;
}

/// Residues u in [1, n) with gcd(u, n) = 1.
inline std::vector<std::int64_t> units(const GroupCtx& g) {
  const std::int64_t n = g.modulus();
  std::vector<std::int64_t> out;
  for (std::int64_t u = 1; u < n; ++u) {
    if (std::gcd(u, n) == 1) out.push_back(u);
  }
  return out;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::int64_t smallest_prime_divisor(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

}  // namespace amp
