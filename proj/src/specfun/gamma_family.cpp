#include "harmonic/specfun/gamma_family.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>
#include <initializer_list>

#include "harmonic/error.hpp"
#include "harmonic/specfun/bernoulli.hpp"

namespace harmonic {

namespace {

constexpr unsigned kMaxStirlingOrder = 10;

// Extra bits carried through shifts and series before rounding to p.
constexpr std::uint32_t kGuardBits = 24;

// Threshold below which lnGamma is decreasing / above which it is increasing.
const Rational kLgammaDecreasingBelow(146, 100);
const Rational kLgammaIncreasingAbove(147, 100);
// lnGamma(x) >= -0.1214862905358... on (0, inf).
const Rational kLgammaMinimumLowerBound(-1215, 10000);

struct Shifted {
  Ball x;                 // working argument, >= threshold
  std::vector<Ball> steps;  // x0, x0 + 1, ..., x - 1
};

Shifted shift_up(const Ball& x0, Precision work) {
  Shifted s{x0.with_precision(work), {}};
  const long threshold = asymptotic_threshold(work);
  const long floor_x = mpfr_get_si(x0.lower().get(), MPFR_RNDD);
  if (floor_x >= threshold) return s;
  const long k = threshold - std::max(floor_x, 0L);
  const Ball one = Ball::from_int(1, work);
  s.steps.reserve(static_cast<std::size_t>(k));
  for (long j = 0; j < k; ++j) {
    s.steps.push_back(s.x);
    s.x = add(s.x, one, work);
  }
  return s;
}

// True once |term| < 2^-(bits + 4), relative to an O(1) result.
bool negligible(const Ball& term, Precision work) {
  const BigFloat mag = ball_abs(term).upper();
  if (mpfr_zero_p(mag.get())) return true;
  return mpfr_get_exp(mag.get()) < -static_cast<mpfr_exp_t>(work.bits()) - 4;
}

BigFloat abs_upper(const Ball& b) { return ball_abs(b).upper(); }

Ball digamma_point(const Ball& x0, Precision p) {
  const Precision work = p.plus(kGuardBits);
  Shifted s = shift_up(x0, work);
  Ball shift_sum(work);
  for (const Ball& step : s.steps) shift_sum = add(shift_sum, ball_inverse(step), work);

  const Ball& x = s.x;
  const Ball inv_x2 = ball_inverse(ball_sqr(x));
  Ball power = Ball::from_int(1, work);
  Ball tail(work);  // sum B_2k / (2k x^2k)
  const unsigned max_terms = 2 * work.bits() + 64;
  bool done = false;
  for (unsigned k = 1; k <= max_terms; ++k) {
    power = mul(power, inv_x2, work);
    Ball t = mul(Ball::from_rational(bernoulli_even(k) / Rational(2L * k), work), power, work);
    if (negligible(t, work)) {
      tail = tail.widened(abs_upper(t).get());
      done = true;
      break;
    }
    tail = add(tail, t, work);
  }
  if (!done) throw EnclosureError("digamma series did not converge");
  Ball value = sub(ball_ln(x, work), ball_inverse(add(x, x, work)), work);
  value = sub(value, tail, work);
  return sub(value, shift_sum, work).with_precision(p);
}

Ball trigamma_point(const Ball& x0, Precision p) {
  const Precision work = p.plus(kGuardBits);
  Shifted s = shift_up(x0, work);
  Ball shift_sum(work);
  for (const Ball& step : s.steps) shift_sum = add(shift_sum, ball_inverse(ball_sqr(step)), work);

  const Ball& x = s.x;
  const Ball inv_x = ball_inverse(x);
  const Ball inv_x2 = ball_sqr(inv_x);
  Ball power = inv_x;  // x^-(2k+1) after k multiplications
  Ball tail(work);
  const unsigned max_terms = 2 * work.bits() + 64;
  bool done = false;
  for (unsigned k = 1; k <= max_terms; ++k) {
    power = mul(power, inv_x2, work);
    Ball t = mul(Ball::from_rational(bernoulli_even(k), work), power, work);
    if (negligible(t, work)) {
      tail = tail.widened(abs_upper(t).get());
      done = true;
      break;
    }
    tail = add(tail, t, work);
  }
  if (!done) throw EnclosureError("trigamma series did not converge");
  Ball value = add(inv_x, mul(Ball::from_rational(Rational(1, 2), work), inv_x2, work), work);
  value = add(value, tail, work);
  return add(value, shift_sum, work).with_precision(p);
}

Ball half_ln_two_pi(Precision work) {
  const Ball two_pi = mul(Ball::from_int(2, work), ball_pi(work), work);
  return mul(Ball::from_rational(Rational(1, 2), work), ball_ln(two_pi, work), work);
}

// sum_{j=1}^{count} B_2j / (2j (2j-1) x^(2j-1))
Ball stirling_sum(const Ball& x, unsigned count, Precision work) {
  const Ball inv_x = ball_inverse(x);
  const Ball inv_x2 = ball_sqr(inv_x);
  Ball power = inv_x;
  Ball acc(work);
  for (unsigned j = 1; j <= count; ++j) {
    const Rational coeff = bernoulli_even(j) / Rational(2L * j * (2L * j - 1));
    acc = add(acc, mul(Ball::from_rational(coeff, work), power, work), work);
    power = mul(power, inv_x2, work);
  }
  return acc;
}

// (x - 1/2) ln x - x + ln(2 pi)/2
Ball stirling_leading(const Ball& x, Precision work) {
  const Ball half = Ball::from_rational(Rational(1, 2), work);
  Ball v = mul(sub(x, half, work), ball_ln(x, work), work);
  v = sub(v, x, work);
  return add(v, half_ln_two_pi(work), work);
}

Ball lgamma_point(const Ball& x0, Precision p) {
  const Precision work = p.plus(kGuardBits);
  Shifted s = shift_up(x0, work);
  Ball product = Ball::from_int(1, work);
  for (const Ball& step : s.steps) product = mul(product, step, work);

  const Ball& x = s.x;
  const Ball inv_x = ball_inverse(x);
  const Ball inv_x2 = ball_sqr(inv_x);
  Ball power = inv_x;
  Ball tail(work);
  const unsigned max_terms = 2 * work.bits() + 64;
  bool done = false;
  for (unsigned j = 1; j <= max_terms; ++j) {
    const Rational coeff = bernoulli_even(j) / Rational(2L * j * (2L * j - 1));
    Ball t = mul(Ball::from_rational(coeff, work), power, work);
    if (negligible(t, work)) {
      tail = tail.widened(abs_upper(t).get());
      done = true;
      break;
    }
    tail = add(tail, t, work);
    power = mul(power, inv_x2, work);
  }
  if (!done) throw EnclosureError("Stirling series did not converge");
  Ball value = add(stirling_leading(x, work), tail, work);
  if (!s.steps.empty()) value = sub(value, ball_ln(product, work), work);
  return value.with_precision(p);
}

void require_positive(const Ball& x, const char* what) {
  if (!x.is_positive()) throw DomainError(std::string(what) + " needs a strictly positive argument");
}

Ball exact_ball(mpfr_srcptr v) {
  Ball b(Precision(static_cast<std::uint32_t>(std::max<mpfr_prec_t>(mpfr_get_prec(v), 53))));
  return Ball::from_endpoints(v, v, b.precision());
}

// p(x) / x^shift for integer coefficients listed from the highest degree down.
Ball poly_over_power(const Ball& x, std::initializer_list<long> coeffs, unsigned shift,
                     long divisor, Precision p) {
  Ball acc(p);
  for (long c : coeffs) acc = add(mul(acc, x, p), Ball::from_int(c, p), p);
  const Ball den = mul(Ball::from_int(divisor, p), ball_pow(x, shift), p);
  return div(acc, den, p);
}

}  // namespace

long asymptotic_threshold(Precision p) {
  return std::max(16L, static_cast<long>(std::ceil(0.12 * p.bits())) + 1);
}

Ball digamma(const Ball& x, Precision p) {
  require_positive(x, "digamma");
  if (x.is_exact()) return digamma_point(x, p);
  const Ball lo = digamma_point(exact_ball(x.lower().get()), p);
  const Ball hi = digamma_point(exact_ball(x.upper().get()), p);
  return Ball::from_endpoints(lo.lower().get(), hi.upper().get(), p);
}

Ball trigamma(const Ball& x, Precision p) {
  require_positive(x, "trigamma");
  if (x.is_exact()) return trigamma_point(x, p);
  const Ball at_hi = trigamma_point(exact_ball(x.upper().get()), p);
  const Ball at_lo = trigamma_point(exact_ball(x.lower().get()), p);
  return Ball::from_endpoints(at_hi.lower().get(), at_lo.upper().get(), p);
}

Ball lgamma(const Ball& x, Precision p) {
  require_positive(x, "lgamma");
  if (x.is_exact()) return lgamma_point(x, p);
  const Ball lo = lgamma_point(exact_ball(x.lower().get()), p);
  const Ball hi = lgamma_point(exact_ball(x.upper().get()), p);
  const Ball hull = ball_hull(lo, hi);
  const Ball lower_end = exact_ball(x.lower().get());
  const Ball upper_end = exact_ball(x.upper().get());
  const bool monotone = ball_compare(upper_end, Ball::from_rational(kLgammaDecreasingBelow, p)) ==
                             Comparison::certainly_less ||
                         ball_compare(lower_end, Ball::from_rational(kLgammaIncreasingAbove, p)) ==
                             Comparison::certainly_greater;
  if (monotone) return hull;
  // The interval may contain the minimum; extend the lower end to a bound
  // valid on the whole half-line.
  return ball_hull(hull, Ball::from_rational(kLgammaMinimumLowerBound, p));
}

Ball stirling_tail(StirlingKind kind, unsigned order, const Ball& x, Precision p) {
  require_positive(x, "stirling_tail");
  if (order > kMaxStirlingOrder) throw DomainError("stirling_tail order must be <= 10");
  // The result is a tiny difference of O(ln x) quantities.
  const Precision work = p.plus(64);
  const Ball xw = x.with_precision(work);
  const unsigned count = kind == StirlingKind::F ? 2 * order : 2 * order + 1;
  Ball f = sub(lgamma(xw, work), stirling_leading(xw, work), work);
  f = sub(f, stirling_sum(xw, count, work), work);
  return (kind == StirlingKind::F ? f : -f).with_precision(p);
}

Ball digamma_lower_envelope(const Ball& x, Precision p) {
  require_positive(x, "digamma envelope");
  return sub(ball_ln(x, p), poly_over_power(x, {1260, 210, 0, -21, 0, 10}, 6, 2520, p), p);
}

Ball digamma_upper_envelope(const Ball& x, Precision p) {
  require_positive(x, "digamma envelope");
  return sub(ball_ln(x, p),
             poly_over_power(x, {2520, 420, 0, -42, 0, 20, 0, -21}, 8, 5040, p), p);
}

Ball trigamma_lower_envelope(const Ball& x, Precision p) {
  require_positive(x, "trigamma envelope");
  return poly_over_power(x, {210, 105, 35, 0, -7, 0, 5, 0, -7}, 9, 210, p);
}

Ball trigamma_upper_envelope(const Ball& x, Precision p) {
  require_positive(x, "trigamma envelope");
  return poly_over_power(x, {210, 105, 35, 0, -7, 0, 5}, 7, 210, p);
}

}  // namespace harmonic
