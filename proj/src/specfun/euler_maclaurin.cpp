#include "harmonic/specfun/euler_maclaurin.hpp"

#include <map>
#include <mutex>

#include "harmonic/error.hpp"
#include "harmonic/specfun/bernoulli.hpp"
#include "harmonic/specfun/harmonic_numbers.hpp"

namespace harmonic {

namespace {

constexpr unsigned kMaxEmOrder = 50;

Ball from_u64(std::uint64_t n, Precision p) {
  return Ball::from_rational(Rational(mpz_class(std::to_string(n)), mpz_class(1)), p);
}

// sum_{i=1}^{q-1} B_2i / (2i n^2i)
Ball correction_sum(std::uint64_t n, unsigned q, Precision p) {
  Ball acc(p);
  const Ball inv_n2 = ball_inverse(ball_sqr(from_u64(n, p)));
  Ball power = inv_n2;
  for (unsigned i = 1; i < q; ++i) {
    const Rational coeff = bernoulli_even(i) / Rational(2L * i);
    acc = add(acc, mul(Ball::from_rational(coeff, p), power, p), p);
    power = mul(power, inv_n2, p);
  }
  return acc;
}

}  // namespace

EmConfig::EmConfig(unsigned q_in, Precision p) : q(q_in), precision(p) {
  if (q_in < 1 || q_in > kMaxEmOrder) throw DomainError("EmConfig.q must be in [1, 50]");
}

BigFloat em_remainder_bound(std::uint64_t n, unsigned q) {
  if (n == 0) throw DomainError("remainder bound needs n >= 1");
  const Rational& b = bernoulli_even(q);
  mpz_class n_pow;
  mpz_class nz(std::to_string(n));
  mpz_pow_ui(n_pow.get_mpz_t(), nz.get_mpz_t(), 2 * q);
  const Rational bound = b.abs() / Rational(mpz_class(2 * q) * n_pow, mpz_class(1));
  BigFloat out(Ball::kRadiusBits);
  mpfr_set_q(out.get(), bound.raw().get_mpq_t(), MPFR_RNDU);
  return out;
}

Ball harmonic_em(std::uint64_t n, const EmConfig& cfg) {
  if (n == 0) throw DomainError("harmonic_em needs n >= 1");
  const Precision p = cfg.precision;
  const Precision work = p.plus(16);
  const Ball nb = from_u64(n, work);
  Ball value = add(ball_ln(nb, work), euler_gamma(work), work);
  value = add(value, ball_inverse(add(nb, nb, work)), work);
  value = sub(value, correction_sum(n, cfg.q, work), work);
  const BigFloat remainder = em_remainder_bound(n, cfg.q);
  return value.widened(remainder.get()).with_precision(p);
}

GammaPolicy euler_gamma_policy(Precision p, unsigned n_scale) {
  GammaPolicy policy;
  std::uint64_t n = 16;
  while (n < p.bits()) n *= 2;
  policy.n = n * n_scale;

  BigFloat target(Ball::kRadiusBits);
  mpfr_set_ui_2exp(target.get(), 1, -static_cast<mpfr_exp_t>(p.bits()) - 2, MPFR_RNDD);
  unsigned q = 1;
  while (mpfr_cmp(em_remainder_bound(policy.n, q).get(), target.get()) > 0) ++q;
  policy.q = q;
  return policy;
}

Ball euler_gamma_with(const GammaPolicy& policy, Precision p) {
  if (policy.n == 0 || policy.q == 0) throw DomainError("invalid euler_gamma policy");
  const Precision work = p.plus(32);
  const Ball nb = from_u64(policy.n, work);
  Ball value = Ball::from_rational(harmonic_exact(policy.n), work);
  value = sub(value, ball_ln(nb, work), work);
  value = sub(value, ball_inverse(add(nb, nb, work)), work);
  value = add(value, correction_sum(policy.n, policy.q, work), work);
  const BigFloat remainder = em_remainder_bound(policy.n, policy.q);
  return value.widened(remainder.get()).with_precision(p);
}

Ball euler_gamma(Precision p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, Ball> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p.bits()); it != cache.end()) return it->second;
  }
  Ball value = euler_gamma_with(euler_gamma_policy(p), p);
  std::lock_guard lock(mutex);
  return cache.emplace(p.bits(), std::move(value)).first->second;
}

}  // namespace harmonic
