#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>

#include "harmonic/error.hpp"

namespace harmonic {

/// Working precision of a ball midpoint, in bits.
class Precision {
 public:
  static constexpr std::uint32_t kMinBits = 53;
  static constexpr std::uint32_t kDefaultBits = 128;
  // Auto-retry loops stop doubling once this is exceeded.
  static constexpr std::uint32_t kCapBits = 4096;

  constexpr Precision() = default;
  constexpr explicit Precision(std::uint32_t bits) : bits_(bits) {
    if (bits < kMinBits) throw DomainError("precision must be at least 53 bits");
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr Precision doubled() const { return Precision(bits_ * 2); }
  constexpr Precision plus(std::uint32_t extra) const { return Precision(bits_ + extra); }
  constexpr bool above_cap() const { return bits_ > kCapBits; }

  friend constexpr auto operator<=>(Precision, Precision) = default;

 private:
  std::uint32_t bits_ = kDefaultBits;
};

constexpr Precision max(Precision a, Precision b) { return a < b ? b : a; }

}  // namespace harmonic
