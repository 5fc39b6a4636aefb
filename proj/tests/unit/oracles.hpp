#pragma once

// Independent reference values for the tests. Everything here is plain exact
// rational arithmetic with explicit tail bounds, so it shares no code path
// with the MPFR-based library routines it checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "harmonic/bigmath/ball.hpp"
#include "harmonic/bigmath/rational.hpp"

namespace oracle {

using harmonic::Rational;

/// Closed rational interval known to contain a real number.
struct Bracket {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
};

/// ln x = 2 atanh(z), z = (x-1)/(x+1). After K terms the tail is at most
/// 2|z|^(2K+1) / ((2K+1)(1 - z^2)).
inline Bracket ln(const Rational& x, unsigned terms = 80) {
  const Rational z = (x - Rational(1)) / (x + Rational(1));
  const Rational z2 = z * z;
  Rational power = z;
  Rational sum(0);
  for (unsigned k = 0; k < terms; ++k) {
    sum += power / Rational(static_cast<long>(2 * k + 1));
    power *= z2;
  }
  sum *= Rational(2);
  const Rational tail =
      Rational(2) * power.abs() / (Rational(static_cast<long>(2 * terms + 1)) * (Rational(1) - z2));
  return {sum - tail, sum + tail};
}

/// e^r for |r| <= 1 by Taylor; the tail after K terms is at most
/// |r|^K / K! * (K+1)/K.
inline Bracket exp(const Rational& r, unsigned terms = 60) {
  Rational term(1);
  Rational sum(0);
  for (unsigned k = 0; k < terms; ++k) {
    sum += term;
    term = term * r / Rational(static_cast<long>(k + 1));
  }
  const Rational tail = term.abs() * Rational(static_cast<long>(terms + 1), static_cast<long>(terms));
  return {sum - tail, sum + tail};
}

/// B_0..B_max from sum_{k=0}^{m} C(m+1, k) B_k = 0, with B_1 = -1/2.
inline std::vector<Rational> bernoulli_table(unsigned max) {
  std::vector<Rational> b{Rational(1)};
  for (unsigned m = 1; m <= max; ++m) {
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += Rational(harmonic::binomial(m + 1, k), 1) * b[k];
    b.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return b;
}

/// 1 + 1/2 + ... + 1/n by a plain loop.
inline Rational harmonic(std::uint64_t n) {
  Rational h(0);
  for (std::uint64_t k = 1; k <= n; ++k) h += Rational(1, static_cast<long>(k));
  return h;
}

// Euler's constant to 60 digits.
inline const char* const kGammaDigits =
    "0.577215664901532860606512090082402431042159335939923598805767";
// pi^2 / 6 to 50 digits.
inline const char* const kZeta2Digits = "1.6449340668482264364724151666460251892189499012068";

/// [d - 10^-k, d + 10^-k] around a k-digit decimal literal.
inline Bracket decimal(const char* digits) {
  const std::string s(digits);
  const auto dot = s.find('.');
  const long places = dot == std::string::npos ? 0 : static_cast<long>(s.size() - dot - 1);
  Rational unit(1);
  for (long i = 0; i < places; ++i) unit /= Rational(10);
  const Rational d = Rational::parse(s);
  return {d - unit, d + unit};
}

/// The ball and the bracket enclose the same real, so they must intersect.
inline bool consistent(const harmonic::Ball& b, const Bracket& r) {
  const harmonic::Ball hull = harmonic::Ball::from_endpoints(
      harmonic::Ball::from_rational(r.lo, b.precision()).lower().get(),
      harmonic::Ball::from_rational(r.hi, b.precision()).upper().get(), b.precision());
  return b.overlaps(hull);
}

/// Random rational with numerator in [-range, range] and denominator in [1, range].
inline Rational random_rational(std::mt19937_64& rng, long range = 1000000) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, range);
  return Rational(num(rng), den(rng));
}

}  // namespace oracle
