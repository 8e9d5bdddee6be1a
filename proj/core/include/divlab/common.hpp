#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace divlab {

using Weight = std::int64_t;

// Error taxonomy mirrors the CLI exit codes: usage=2, capacity=3,
// falsification=1. Anything else is a plain logic_error (a bug).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& m) : std::runtime_error(m) {}
};

struct FalsificationError : std::runtime_error {
  // witness: machine-readable hint naming the object that failed
  std::string witness;
  FalsificationError(const std::string& m, std::string w)
      : std::runtime_error(m), witness(std::move(w)) {}
};

inline Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("integer overflow in add");
  return r;
}

inline Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("integer overflow in mul");
  return r;
}

// 64-bit mixing for canonical-state hashing; must be deterministic
// across platforms and runs (no std::hash).
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  v *= 0x9e3779b97f4a7c15ull;
  v ^= v >> 32;
  h ^= v;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

constexpr std::uint64_t kHashSeed = 0x6d69766c61620001ull;

}  // namespace divlab
