#pragma once

#include <cstdint>
#include <vector>

#include "harmonic/bigmath/ball.hpp"
#include "harmonic/bigmath/rational.hpp"

namespace harmonic {

/// H(n) = 1 + 1/2 + ... + 1/n, exactly. Throws DomainError for n = 0.
Rational harmonic_exact(std::uint64_t n);

/// 1 + 1/3 + ... + 1/(2n-1), exactly.
Rational odd_harmonic_exact(std::uint64_t n);

/// 1 - 1/2 + 1/3 - ... + (-1)^(n-1)/n, exactly.
Rational alternating_partial_sum(std::uint64_t n);

/// |sum_{k>n} (-1)^(k-1)/k| = |ln 2 - alternating_partial_sum(n)|.
Ball alternating_tail(std::uint64_t n, Precision p);

/// Same, from a precomputed enclosure of the partial sum.
Ball alternating_tail_from(const Ball& partial_sum, std::uint64_t n, Precision p);

/// Enclosures of H(n), the odd-denominator sum and the alternating partial sum
/// for every n in [1, max_n] at one precision. The exact running sums are
/// accumulated once and rounded to balls, so a sweep over n costs one exact
/// addition per index instead of one full summation.
class HarmonicSums {
 public:
  HarmonicSums(std::uint64_t max_n, Precision p);

  std::uint64_t max_n() const { return max_n_; }
  Precision precision() const { return precision_; }

  const Ball& harmonic(std::uint64_t n) const { return harmonic_.at(n - 1); }
  const Ball& odd_harmonic(std::uint64_t n) const { return odd_.at(n - 1); }
  const Ball& alternating(std::uint64_t n) const { return alternating_.at(n - 1); }

 private:
  std::uint64_t max_n_;
  Precision precision_;
  std::vector<Ball> harmonic_;
  std::vector<Ball> odd_;
  std::vector<Ball> alternating_;
};

}  // namespace harmonic
