#include "harmonic/specfun/bernoulli.hpp"

#include <algorithm>
#include <vector>

namespace harmonic {

BernoulliCache& BernoulliCache::shared() {
  static BernoulliCache cache;
  return cache;
}

const Rational& BernoulliCache::get(unsigned m) {
  if (m % 2 == 1) {
    static const Rational kMinusHalf(-1, 2);
    static const Rational kZero(0);
    return m == 1 ? kMinusHalf : kZero;
  }
  const unsigned k = m / 2;
  std::lock_guard lock(mutex_);
  if (k >= even_.size()) extend_to(std::max<unsigned>(k + 1, 2 * static_cast<unsigned>(even_.size())));
  return even_[k];
}

void BernoulliCache::extend_to(unsigned count) {
  // Tangent numbers T_1..T_n (Brent and Harvey's in-place recurrence).
  const unsigned n = count - 1;
  if (even_.empty()) even_.emplace_back(1);
  if (n == 0) return;
  std::vector<mpz_class> t(n + 1);
  t[1] = 1;
  for (unsigned k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (unsigned k = 2; k <= n; ++k) {
    for (unsigned j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  for (unsigned k = static_cast<unsigned>(even_.size()); k <= n; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    mpz_class num = 2 * k * t[k];
    if (k % 2 == 0) num = -num;
    even_.emplace_back(num, mpz_class(four_k * (four_k - 1)));
  }
}

Rational bernoulli_number(unsigned m) { return BernoulliCache::shared().get(m); }

const Rational& bernoulli_even(unsigned k) { return BernoulliCache::shared().get(2 * k); }

Rational bernoulli_polynomial(unsigned m, const Rational& x) {
  // Horner in x over the coefficients C(m,k) B_k of x^(m-k).
  Rational acc(0);
  for (unsigned k = 0; k <= m; ++k) {
    acc = acc * x + Rational(binomial(m, k), mpz_class(1)) * bernoulli_number(k);
  }
  return acc;
}

}  // namespace harmonic
