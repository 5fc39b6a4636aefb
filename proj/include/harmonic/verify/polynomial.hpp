#pragma once

#include <string>
#include <vector>

#include "harmonic/bigmath/rational.hpp"

namespace harmonic {

/// Univariate polynomial with exact rational coefficients; coeffs()[i] is
/// the coefficient of t^i. Trailing zeros are trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial variable();  // t

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& t) const;
  /// q(s) = p(s + a), i.e. the Taylor coefficients of p at a.
  Polynomial shifted(const Rational& a) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// num / den in one symbol; equality is decided by cross-multiplication, so
/// it holds as an identity in the symbol, independent of its value.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
  static RationalFunction variable();

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  bool identical_to(const RationalFunction& other) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace harmonic
