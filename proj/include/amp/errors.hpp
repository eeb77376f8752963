#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace amp {

// Precondition violated by the caller (bad descriptor, invalid pair, n out of
// the operation's domain).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integer element or coefficient left its representable range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A configured enumeration / exhaustive-search bound was exceeded.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Two independent evidence routes disagreed, or a claim failed to re-verify.
// The message carries the diagnostic dump.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw OverflowError("uint64 addition overflow: " + std::to_string(x) + " + " + std::to_string(y));
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw OverflowError("uint64 multiplication overflow: " + std::to_string(x) + " * " + std::to_string(y));
  }
  return r;
}

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw OverflowError("int64 addition overflow: " + std::to_string(x) + " + " + std::to_string(y));
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw OverflowError("int64 multiplication overflow: " + std::to_string(x) + " * " + std::to_string(y));
  }
  return r;
}

}  // namespace detail
}  // namespace amp
