#include "harmonic/specfun/harmonic_numbers.hpp"

#include "harmonic/error.hpp"

namespace harmonic {

namespace {

struct Fraction {
  mpz_class num;
  mpz_class den;
};

// Binary splitting of sum_{i=lo}^{hi-1} sign(i) / (step*i + offset); the
// fraction is reduced only once, at the end.
template <typename Term>
Fraction split_sum(std::uint64_t lo, std::uint64_t hi, const Term& term) {
  if (hi - lo == 1) return term(lo);
  const std::uint64_t mid = lo + (hi - lo) / 2;
  Fraction a = split_sum(lo, mid, term);
  Fraction b = split_sum(mid, hi, term);
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

template <typename Term>
Rational sum_terms(std::uint64_t n, const Term& term) {
  if (n == 0) throw DomainError("harmonic sums start at n = 1");
  Fraction f = split_sum(1, n + 1, term);
  return Rational(f.num, f.den);
}

mpz_class to_mpz(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

}  // namespace

Rational harmonic_exact(std::uint64_t n) {
  return sum_terms(n, [](std::uint64_t i) { return Fraction{1, to_mpz(i)}; });
}

Rational odd_harmonic_exact(std::uint64_t n) {
  return sum_terms(n, [](std::uint64_t k) { return Fraction{1, to_mpz(2 * k - 1)}; });
}

Rational alternating_partial_sum(std::uint64_t n) {
  return sum_terms(n, [](std::uint64_t k) {
    return Fraction{k % 2 == 1 ? 1 : -1, to_mpz(k)};
  });
}

Ball alternating_tail_from(const Ball& partial_sum, std::uint64_t n, Precision p) {
  Ball diff = sub(ball_ln(Ball::from_int(2, p), p), partial_sum, p);
  // ln 2 - S_n has sign (-1)^n.
  return n % 2 == 0 ? diff : -diff;
}

Ball alternating_tail(std::uint64_t n, Precision p) {
  const Precision work = p.plus(16);
  const Ball s = Ball::from_rational(alternating_partial_sum(n), work);
  return alternating_tail_from(s, n, work).with_precision(p);
}

HarmonicSums::HarmonicSums(std::uint64_t max_n, Precision p) : max_n_(max_n), precision_(p) {
  if (max_n == 0) throw DomainError("harmonic table needs max_n >= 1");
  harmonic_.reserve(max_n);
  odd_.reserve(max_n);
  alternating_.reserve(max_n);
  mpq_class h, odd, alt;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const mpq_class inv(mpz_class(1), to_mpz(n));
    h += inv;
    alt += (n % 2 == 1) ? inv : mpq_class(-inv);
    odd += mpq_class(mpz_class(1), to_mpz(2 * n - 1));
    harmonic_.push_back(Ball::from_rational(Rational(h), p));
    odd_.push_back(Ball::from_rational(Rational(odd), p));
    alternating_.push_back(Ball::from_rational(Rational(alt), p));
  }
}

}  // namespace harmonic
