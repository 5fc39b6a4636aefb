#pragma once

#include <cstdint>

#include "harmonic/bigmath/ball.hpp"

namespace harmonic {

/// Truncation order of the Euler-Maclaurin expansion of H(n): the expansion
/// keeps the correction terms B_2i / (2i n^2i) for i < q and bounds the
/// remainder by the first omitted term.
struct EmConfig {
  unsigned q = 3;
  Precision precision{};

  EmConfig() = default;
  EmConfig(unsigned q_in, Precision p);
};

/// Upper bound |B_2q| / (2q n^2q) on the Euler-Maclaurin remainder, rounded up.
BigFloat em_remainder_bound(std::uint64_t n, unsigned q);

/// H(n) ~ ln n + gamma + 1/(2n) - sum_{i<q} B_2i / (2i n^2i), with the
/// remainder folded into the radius.
Ball harmonic_em(std::uint64_t n, const EmConfig& cfg);

/// How euler_gamma picks its expansion point: n and the number of terms q.
struct GammaPolicy {
  std::uint64_t n = 0;
  unsigned q = 0;
};

/// Default policy at precision p: n is the next power of two >= max(p, 16)
/// times `n_scale`, and q is the least order whose remainder bound is below
/// 2^-(p+2).
GammaPolicy euler_gamma_policy(Precision p, unsigned n_scale = 1);

/// gamma = H(n) - ln n - 1/(2n) + sum_{i<q} B_2i/(2i n^2i), remainder folded
/// into the radius. Uncached.
Ball euler_gamma_with(const GammaPolicy& policy, Precision p);

/// Enclosure of the Euler-Mascheroni constant with radius <= 2^(8-p).
/// Cached per precision; thread-safe.
Ball euler_gamma(Precision p);

}  // namespace harmonic
