#include "harmonic/bigmath/rational.hpp"

#include <string>

#include "harmonic/error.hpp"

namespace harmonic {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  const auto slash = s.find('/');
  const auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
    }
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
      return Rational(mpz_class(digits, 10), den);
    }
    return Rational(mpz_class(s, 10), mpz_class(1));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational literal: " + s);
  }
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_str();
}

Rational rational_arith(const Rational& a, const Rational& b, RationalOp op) {
  switch (op) {
    case RationalOp::add: return a + b;
    case RationalOp::sub: return a - b;
    case RationalOp::mul: return a * b;
    case RationalOp::div: return a / b;
  }
  throw DomainError("unknown rational op");
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace harmonic
