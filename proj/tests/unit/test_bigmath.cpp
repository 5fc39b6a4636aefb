#include <doctest.h>

#include <random>
#include <string>

#include "harmonic/bigmath/ball.hpp"
#include "harmonic/bigmath/format.hpp"
#include "harmonic/bigmath/precision.hpp"
#include "harmonic/bigmath/rational.hpp"
#include "harmonic/error.hpp"
#include "oracles.hpp"

using namespace harmonic;

namespace {

// Reads "1.5", "-2.5e-7" or "3e4" as an exact rational.
Rational parse_scientific(const std::string& s) {
  const auto e = s.find('e');
  if (e == std::string::npos) return Rational::parse(s);
  Rational v = Rational::parse(s.substr(0, e));
  const long exponent = std::stol(s.substr(e + 1));
  const Rational ten(10);
  for (long i = 0; i < std::abs(exponent); ++i) v = exponent > 0 ? v * ten : v / ten;
  return v;
}

}  // namespace

TEST_CASE("precision limits") {
  CHECK(Precision{}.bits() == 128);
  CHECK_THROWS_AS(Precision(52), DomainError);
  CHECK(Precision(4096).doubled().above_cap());
  CHECK_FALSE(Precision(4096).above_cap());
  CHECK(max(Precision(64), Precision(256)).bits() == 256);
}

TEST_CASE("rational parsing and normal form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("0.36528") == Rational(36528, 100000));
  CHECK(Rational::parse("0089") == Rational(89));
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(7381, 2520).to_string() == "7381/2520");
  CHECK(Rational(4, 2).is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("abc"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational arithmetic laws on random samples") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = oracle::random_rational(rng);
    const Rational b = oracle::random_rational(rng);
    const Rational c = oracle::random_rational(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(rational_arith(a, b, RationalOp::sub) == a - b);
    CHECK((a < b) == (a.to_double() < b.to_double() || (a < b && a.to_double() == b.to_double())));
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  mpz_class row_sum = 0;
  for (unsigned k = 0; k <= 20; ++k) row_sum += binomial(20, k);
  CHECK(row_sum == mpz_class(1) << 20);
}

TEST_CASE("ball from rational is tight") {
  const Precision p(128);
  const Ball third = div(Ball::from_int(1, p), Ball::from_int(3, p), p);
  CHECK(third.contains(Rational(1, 3)));
  // Two ulps at 128 bits relative to 1/3.
  CHECK(third.rad_double() <= std::ldexp(1.0, -128 - 1) * 2);
  CHECK(Ball::from_int(7, p).is_exact());
  CHECK(Ball::from_rational(Rational(1, 4), p).is_exact());
}

TEST_CASE("ball arithmetic encloses exact results") {
  // Property: for random rationals a, b the ball result of a op b contains
  // the exact rational result, at several precisions and with widened inputs.
  std::mt19937_64 rng(2024);
  const BallOp ops[] = {BallOp::add, BallOp::sub, BallOp::mul, BallOp::div};
  const RationalOp exact_ops[] = {RationalOp::add, RationalOp::sub, RationalOp::mul,
                                  RationalOp::div};
  std::uniform_int_distribution<int> bits(53, 300);
  for (int i = 0; i < 1000; ++i) {
    const Precision p(static_cast<std::uint32_t>(bits(rng)));
    const Rational a = oracle::random_rational(rng);
    Rational b = oracle::random_rational(rng);
    if (b.is_zero()) b = Rational(1);
    const Ball ba = Ball::from_rational(a, p);
    const Ball bb = Ball::from_rational(b, p);
    for (int k = 0; k < 4; ++k) {
      const Ball r = ball_arith(ba, bb, ops[k], p);
      CHECK(r.contains(rational_arith(a, b, exact_ops[k])));
    }
    // Balls built from a hull of two rationals contain everything between.
    const Rational lo = a < b ? a : b;
    const Rational hi = a < b ? b : a;
    const Ball hull = ball_hull(Ball::from_rational(lo, p), Ball::from_rational(hi, p));
    CHECK(hull.contains((lo + hi) / Rational(2)));
    const Ball sq = ball_sqr(hull);
    CHECK(sq.contains(lo * lo));
    CHECK(sq.contains(hi * hi));
    if (lo.sign() <= 0 && hi.sign() >= 0) CHECK(sq.contains(Rational(0)));
  }
}

TEST_CASE("ball division by a ball containing zero throws") {
  const Precision p(64);
  const Ball around_zero = Ball::from_double(0.0, 1e-3, p);
  CHECK(around_zero.contains_zero());
  CHECK_THROWS_AS(div(Ball::from_int(1, p), around_zero, p), EnclosureError);
  CHECK_THROWS_AS(ball_inverse(around_zero), EnclosureError);
}

TEST_CASE("comparisons are exact") {
  const Precision p(128);
  const Ball a = Ball::from_rational(Rational(1, 3), p);
  const Ball b = Ball::from_rational(Rational(1, 3) + Rational(1, 1000000), p);
  CHECK(ball_compare(a, b) == Comparison::certainly_less);
  CHECK(ball_compare(b, a) == Comparison::certainly_greater);
  CHECK(ball_compare(a, a) == Comparison::overlapping);
  CHECK(certainly_equal(Ball::from_int(2, p), Ball::from_int(2, p)));
  CHECK_FALSE(certainly_equal(a, a.widened(Ball::from_double(1e-50, 0, p).mid())));
}

TEST_CASE("ln against the atanh series") {
  const Precision p(200);
  for (long x : {2L, 3L, 5L, 10L, 1000L}) {
    const oracle::Bracket ref = oracle::ln(Rational(x), 400);
    const Ball b = ball_ln(Ball::from_int(x, p), p);
    CAPTURE(x);
    CHECK(oracle::consistent(b, ref));
    CHECK(b.rad_double() < 1e-55);
  }
  // ln 2 bracket from the series is itself tight enough to pin the ball.
  const oracle::Bracket ln2 = oracle::ln(Rational(2), 120);
  CHECK(ln2.width() < Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000));
  CHECK(ball_ln(Ball::from_int(2, Precision(128)), Precision(128)).contains(ln2.lo));
  CHECK_THROWS_AS(ball_ln(Ball::from_int(0, p), p), DomainError);
  CHECK_THROWS_AS(ball_ln(Ball::from_double(0.0, 0.5, p), p), DomainError);
}

TEST_CASE("exp against the Taylor series") {
  const Precision p(200);
  const oracle::Bracket e = oracle::exp(Rational(1), 80);
  CHECK(oracle::consistent(ball_exp(Ball::from_int(1, p), p), e));
  const oracle::Bracket ehalf = oracle::exp(Rational(-1, 2), 80);
  CHECK(oracle::consistent(ball_exp(Ball::from_rational(Rational(-1, 2), p), p), ehalf));
  // exp(ln x) round trip encloses x.
  const Ball x = ball_exp(ball_ln(Ball::from_int(7, p), p), p);
  CHECK(x.contains(Rational(7)));
}

TEST_CASE("sqrt and pi") {
  const Precision p(128);
  const Ball r = ball_sqrt(Ball::from_int(2, p), p);
  CHECK(ball_sqr(r).contains(Rational(2)));
  const Ball pi = ball_pi(p);
  CHECK(oracle::consistent(pi, oracle::decimal("3.14159265358979323846264338327950288")));
}

TEST_CASE("interval functions cover both endpoints") {
  const Precision p(128);
  const Ball x = ball_hull(Ball::from_int(2, p), Ball::from_int(3, p));
  const Ball l = ball_ln(x, p);
  CHECK(oracle::consistent(l, oracle::ln(Rational(2), 200)));
  CHECK(oracle::consistent(l, oracle::ln(Rational(3), 200)));
  CHECK(ball_pow(Ball::from_int(3, p), 5).contains(Rational(243)));
  const Ball m = ball_min(Ball::from_int(2, p), Ball::from_int(5, p));
  CHECK(m.contains(Rational(2)));
  CHECK_FALSE(m.contains(Rational(5)));
}

TEST_CASE("decimal rendering encloses the ball") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Precision p(128);
    const Rational q = oracle::random_rational(rng);
    const Ball b = ball_ln(Ball::from_rational(q.abs() + Rational(1, 1000), p), p);
    const DecimalBall d = to_decimal(b);
    const Rational mid = parse_scientific(d.mid);
    const Rational rad = parse_scientific(d.rad);
    const Ball printed = ball_hull(Ball::from_rational(mid - rad, Precision(512)),
                                   Ball::from_rational(mid + rad, Precision(512)));
    CAPTURE(d.mid);
    CAPTURE(d.rad);
    CHECK(printed.contains(b));
  }
  CHECK(format_ball(Ball::from_int(1, Precision(128))) == "1 +/- 0");
  const std::string s = format_ball(Ball::from_rational(Rational(7381, 2520), Precision(128)));
  CHECK(s.rfind("2.928968253968253968", 0) == 0);
}
