#pragma once

#include <deque>
#include <mutex>

#include "harmonic/bigmath/rational.hpp"

namespace harmonic {

/// Bernoulli numbers B_m with B_1 = -1/2, grown on demand.
///
/// Even-index values come from the integer tangent numbers T_k via
/// B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)), which stays in integer
/// arithmetic and is much cheaper than the rational recurrence for large m.
/// Entries are appended under a mutex and never modified afterwards, so the
/// returned references stay valid for the lifetime of the cache.
class BernoulliCache {
 public:
  const Rational& get(unsigned m);

  /// Process-wide instance used by the free functions below.
  static BernoulliCache& shared();

 private:
  void extend_to(unsigned even_index_count);

  std::mutex mutex_;
  std::deque<Rational> even_;  // even_[k] = B_2k
};

/// Exact B_m; zero for odd m >= 3.
Rational bernoulli_number(unsigned m);

/// Reference to the cached even-index value B_2k.
const Rational& bernoulli_even(unsigned k);

/// B_m(x) = sum_k C(m,k) B_k x^(m-k).
Rational bernoulli_polynomial(unsigned m, const Rational& x);

}  // namespace harmonic
