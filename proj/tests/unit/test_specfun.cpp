#include <doctest.h>

#include <random>

#include "harmonic/bigmath/ball.hpp"
#include "harmonic/error.hpp"
#include "harmonic/specfun/bernoulli.hpp"
#include "harmonic/specfun/euler_maclaurin.hpp"
#include "harmonic/specfun/gamma_family.hpp"
#include "harmonic/specfun/harmonic_numbers.hpp"
#include "oracles.hpp"

using namespace harmonic;

TEST_CASE("Bernoulli numbers match the binomial recurrence") {
  const std::vector<Rational> ref = oracle::bernoulli_table(120);
  for (unsigned m = 0; m <= 120; ++m) {
    CAPTURE(m);
    CHECK(bernoulli_number(m) == ref[m]);
  }
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(7) == Rational(0));
  for (unsigned m = 1; m <= 30; ++m) {
    Rational acc(0);
    for (unsigned k = 0; k <= m; ++k) acc += Rational(binomial(m + 1, k), 1) * bernoulli_number(k);
    CHECK(acc == Rational(0));
  }
}

TEST_CASE("Bernoulli cache entries are stable") {
  const Rational& b10 = bernoulli_even(5);
  const Rational copy = b10;
  bernoulli_even(200);  // forces growth
  CHECK(&bernoulli_even(5) == &b10);
  CHECK(b10 == copy);
  CHECK(copy == Rational(5, 66));
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_polynomial(0, Rational(3, 7)) == Rational(1));
  CHECK(bernoulli_polynomial(2, Rational(0)) == Rational(1, 6));
  CHECK(bernoulli_polynomial(1, Rational(1, 2)) == Rational(0));
  // B_m(1 - x) = (-1)^m B_m(x)
  const Rational x(2, 9);
  for (unsigned m = 1; m <= 12; ++m) {
    const Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(bernoulli_polynomial(m, Rational(1) - x) == sign * bernoulli_polynomial(m, x));
  }
}

TEST_CASE("exact harmonic sums") {
  CHECK(harmonic_exact(1) == Rational(1));
  CHECK(harmonic_exact(2) == Rational(3, 2));
  CHECK(harmonic_exact(10) == Rational(7381, 2520));
  CHECK_THROWS_AS(harmonic_exact(0), DomainError);
  for (std::uint64_t n : {3u, 17u, 64u, 100u, 257u}) CHECK(harmonic_exact(n) == oracle::harmonic(n));
  CHECK(odd_harmonic_exact(1) == Rational(1));
  CHECK(odd_harmonic_exact(2) == Rational(4, 3));
  CHECK(odd_harmonic_exact(3) == Rational(23, 15));
  CHECK(alternating_partial_sum(4) == Rational(7, 12));
}

TEST_CASE("cached sums agree with exact sums") {
  const HarmonicSums sums(300, Precision(128));
  for (std::uint64_t n = 1; n <= 300; n += 23) {
    CHECK(sums.harmonic(n).contains(harmonic_exact(n)));
    CHECK(sums.odd_harmonic(n).contains(odd_harmonic_exact(n)));
    CHECK(sums.alternating(n).contains(alternating_partial_sum(n)));
  }
}

TEST_CASE("alternating tail") {
  const Precision p(128);
  const oracle::Bracket ln2 = oracle::ln(Rational(2), 120);
  CHECK(oracle::consistent(alternating_tail(1, p), {Rational(1) - ln2.hi, Rational(1) - ln2.lo}));
  CHECK(oracle::consistent(alternating_tail(2, p),
                           {ln2.lo - Rational(1, 2), ln2.hi - Rational(1, 2)}));
  CHECK(alternating_tail(5, Precision(256)).rad_double() < alternating_tail(5, p).rad_double());
}

TEST_CASE("Euler-Maclaurin harmonic numbers") {
  CHECK(harmonic_em(10, EmConfig(3, Precision(128))).contains(Rational(7381, 2520)));
  CHECK(harmonic_em(1, EmConfig(2, Precision(128))).contains(Rational(1)));
  const Ball h100 = harmonic_em(100, EmConfig(5, Precision(128)));
  CHECK(h100.rad_double() * 2 < 1e-20);
  CHECK_THROWS_AS(EmConfig(0, Precision(128)), DomainError);
  CHECK_THROWS_AS(EmConfig(51, Precision(128)), DomainError);

  // Property on random indices and orders.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> index(1, 3000);
  std::uniform_int_distribution<unsigned> order(1, 8);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = index(rng);
    const unsigned q = order(rng);
    CAPTURE(n);
    CAPTURE(q);
    CHECK(harmonic_em(n, EmConfig(q, Precision(128))).contains(harmonic_exact(n)));
  }
}

TEST_CASE("Euler's constant") {
  CHECK(oracle::consistent(euler_gamma(Precision(53)), oracle::decimal("0.57721566")));
  const Ball g256 = euler_gamma(Precision(256));
  CHECK(oracle::consistent(g256, oracle::decimal(oracle::kGammaDigits)));
  CHECK(g256.rad_double() < euler_gamma(Precision(128)).rad_double());
  // Two distinct expansion points give overlapping, tight enclosures.
  const Precision p(256);
  const GammaPolicy a = euler_gamma_policy(p, 1);
  const GammaPolicy b = euler_gamma_policy(p, 4);
  CHECK(a.n != b.n);
  const Ball ga = euler_gamma_with(a, p);
  const Ball gb = euler_gamma_with(b, p);
  CHECK(ga.overlaps(gb));
  CHECK(ga.rad_double() + gb.rad_double() < 1e-60);
}

TEST_CASE("digamma") {
  const Precision p(128);
  const Ball g = euler_gamma(p);
  CHECK(digamma(Ball::from_int(2, p), p).overlaps(sub(Ball::from_int(1, p), g, p)));
  const Ball diff = sub(digamma(Ball::from_int(6, p), p), digamma(Ball::from_int(5, p), p), p);
  CHECK(diff.contains(Rational(1, 5)));
  // psi(n+1) + gamma encloses H(n).
  for (std::uint64_t n = 1; n <= 1000; n += (n < 50 ? 1 : 37)) {
    const Ball h = add(digamma(Ball::from_u64(n + 1, p), p), g, p);
    CAPTURE(n);
    CHECK(h.contains(harmonic_exact(n)));
  }
  CHECK_THROWS_AS(digamma(Ball::from_int(0, p), p), DomainError);
}

TEST_CASE("digamma lies between its polynomial envelopes") {
  const Precision p(256);
  for (long x : {8L, 10L, 20L, 50L, 100L}) {
    const Ball bx = Ball::from_int(x, p);
    const Ball psi = digamma(bx, p);
    CAPTURE(x);
    CHECK(ball_compare(digamma_lower_envelope(bx, p), psi) == Comparison::certainly_less);
    CHECK(ball_compare(psi, digamma_upper_envelope(bx, p)) == Comparison::certainly_less);
  }
}

TEST_CASE("trigamma") {
  const Precision p(128);
  // pi^2/6, with a test-side bracket: partial sum of 1/k^2 plus the tail
  // bracket 1/(N+1) < sum_{k>N} 1/k^2 < 1/N.
  Rational partial(0);
  const long big_n = 2000;
  for (long k = 1; k <= big_n; ++k) partial += Rational(1, k * k);
  const Ball t1 = trigamma(Ball::from_int(1, p), p);
  CHECK(oracle::consistent(t1, {partial + Rational(1, big_n + 1), partial + Rational(1, big_n)}));
  CHECK(oracle::consistent(t1, oracle::decimal(oracle::kZeta2Digits)));
  const Ball d = sub(trigamma(Ball::from_int(5, p), p), trigamma(Ball::from_int(4, p), p), p);
  CHECK(d.contains(Rational(-1, 16)));
  const Ball x3 = Ball::from_int(3, p);
  const Ball t3 = trigamma(x3, p);
  CHECK(ball_compare(trigamma_lower_envelope(x3, p), t3) == Comparison::certainly_less);
  CHECK(ball_compare(t3, trigamma_upper_envelope(x3, p)) == Comparison::certainly_less);
}

TEST_CASE("log-gamma") {
  const Precision p(128);
  CHECK(lgamma(Ball::from_int(1, p), p).contains(Rational(0)));
  CHECK(oracle::consistent(lgamma(Ball::from_int(5, p), p), oracle::ln(Rational(24), 300)));
  const Ball d = sub(lgamma(Ball::from_rational(Rational(15, 2), p), p),
                     lgamma(Ball::from_rational(Rational(13, 2), p), p), p);
  CHECK(oracle::consistent(d, oracle::ln(Rational(13, 2), 300)));
  CHECK(oracle::consistent(lgamma(Ball::from_rational(Rational(15, 2), p), p),
                           oracle::decimal("7.5343642367587329551583676324366857")));
  // An interval across the minimum near 1.4616 still encloses lnGamma there.
  const Ball around_min = ball_hull(Ball::from_rational(Rational(14, 10), p),
                                    Ball::from_rational(Rational(15, 10), p));
  const Ball at_min = lgamma(Ball::from_rational(Rational(14616, 10000), p), p);
  CHECK(lgamma(around_min, p).contains(at_min));
}

TEST_CASE("recurrences hold on a grid in (0, 50]") {
  const Precision p(128);
  for (int i = 1; i <= 50; ++i) {
    const Rational xr(i * 49 + 1, 50);  // 1, ..., spread over (0, 50]
    const Ball x = Ball::from_rational(xr, p);
    const Ball x1 = Ball::from_rational(xr + Rational(1), p);
    const Ball inv = Ball::from_rational(Rational(1) / xr, p);
    CAPTURE(xr.to_string());
    CHECK(sub(sub(digamma(x1, p), digamma(x, p), p), inv, p).contains_zero());
    CHECK(add(sub(trigamma(x1, p), trigamma(x, p), p), ball_sqr(inv), p).contains_zero());
    CHECK(sub(sub(lgamma(x1, p), lgamma(x, p), p), ball_ln(x, p), p).contains_zero());
  }
}

TEST_CASE("Stirling tails are positive and decreasing") {
  const Precision p(128);
  const Ball f2_1 = stirling_tail(StirlingKind::F, 2, Ball::from_int(1, p), p);
  CHECK(f2_1.is_positive());
  CHECK(oracle::consistent(f2_1, oracle::decimal("0.000307498541359")));
  CHECK(stirling_tail(StirlingKind::G, 1, Ball::from_int(2, p), p).is_positive());
  CHECK(ball_compare(stirling_tail(StirlingKind::F, 2, Ball::from_int(10, p), p),
                     stirling_tail(StirlingKind::F, 2, Ball::from_int(5, p), p)) ==
        Comparison::certainly_less);
  // Geometric grid from 1/2 to 100.
  for (StirlingKind kind : {StirlingKind::F, StirlingKind::G}) {
    const unsigned order = kind == StirlingKind::F ? 2 : 1;
    Rational x(1, 2);
    Ball previous = stirling_tail(kind, order, Ball::from_rational(x, p), p);
    while (x < Rational(100)) {
      x *= Rational(3, 2);
      const Ball current = stirling_tail(kind, order, Ball::from_rational(x, p), p);
      CAPTURE(x.to_string());
      CHECK(current.is_positive());
      CHECK(ball_compare(current, previous) == Comparison::certainly_less);
      previous = current;
    }
  }
  CHECK_THROWS_AS(stirling_tail(StirlingKind::F, 11, Ball::from_int(2, p), p), DomainError);
}

TEST_CASE("asymptotic threshold grows with precision") {
  CHECK(asymptotic_threshold(Precision(53)) == 16);
  CHECK(asymptotic_threshold(Precision(128)) == 17);
  CHECK(asymptotic_threshold(Precision(1024)) > 100);
}
