#pragma once

#include <string>

#include <mpfr.h>

#include "harmonic/bigmath/precision.hpp"
#include "harmonic/bigmath/rational.hpp"

namespace harmonic {

/// Owning handle for an MPFR number. Copies keep the source precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }

 private:
  void release();

  mpfr_t value_;
  bool owns_ = true;
};

/// A real number known to lie in [mid - rad, mid + rad].
///
/// The midpoint carries the working precision; the radius is a short float
/// that is always rounded upward, so every operation below returns a ball
/// containing every possible exact result of its inputs. Balls are never
/// infinite or NaN; an operation that would produce one throws.
class Ball {
 public:
  static constexpr mpfr_prec_t kRadiusBits = 30;

  explicit Ball(Precision p = Precision{});

  static Ball from_int(long value, Precision p = Precision{});
  static Ball from_u64(unsigned long value, Precision p = Precision{});
  static Ball from_rational(const Rational& value, Precision p = Precision{});
  /// Exact double midpoint with the given radius (rounded up). Test helper.
  static Ball from_double(double mid, double rad = 0.0, Precision p = Precision{});
  /// Smallest ball at precision p containing [lo, hi].
  static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision p);

  Precision precision() const { return precision_; }
  mpfr_srcptr mid() const { return mid_.get(); }
  mpfr_srcptr rad() const { return rad_.get(); }

  double mid_double() const;
  /// Radius rounded up to a double.
  double rad_double() const;

  BigFloat lower() const;  // mid - rad, rounded down
  BigFloat upper() const;  // mid + rad, rounded up

  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
  bool is_positive() const;  // lower() > 0
  bool is_negative() const;  // upper() < 0
  bool contains_zero() const { return !is_positive() && !is_negative(); }
  bool contains(const Rational& value) const;
  bool contains(const Ball& other) const;
  bool overlaps(const Ball& other) const;

  /// Re-rounds the midpoint to a new precision, widening the radius by the
  /// rounding error.
  Ball with_precision(Precision p) const;
  /// Adds a nonnegative amount to the radius.
  Ball widened(mpfr_srcptr extra) const;

  Ball operator-() const;

 private:
  friend class BallAccess;

  Precision precision_;
  BigFloat mid_;
  BigFloat rad_;
};

enum class BallOp { add, sub, mul, div };

Ball add(const Ball& a, const Ball& b, Precision p);
Ball sub(const Ball& a, const Ball& b, Precision p);
Ball mul(const Ball& a, const Ball& b, Precision p);
/// Throws EnclosureError when b contains zero.
Ball div(const Ball& a, const Ball& b, Precision p);
Ball ball_arith(const Ball& a, const Ball& b, BallOp op, Precision p);

// Operators work at the larger of the two operand precisions.
Ball operator+(const Ball& a, const Ball& b);
Ball operator-(const Ball& a, const Ball& b);
Ball operator*(const Ball& a, const Ball& b);
Ball operator/(const Ball& a, const Ball& b);

Ball ball_ln(const Ball& a, Precision p);
Ball ball_exp(const Ball& a, Precision p);
Ball ball_sqrt(const Ball& a, Precision p);
Ball ball_pi(Precision p);
Ball ball_from_rational(const Rational& a, Precision p);

Ball ball_abs(const Ball& a);
Ball ball_sqr(const Ball& a);
Ball ball_inverse(const Ball& a);
Ball ball_pow(const Ball& a, unsigned exponent);
/// Convex hull of two balls.
Ball ball_hull(const Ball& a, const Ball& b);
/// Ball whose interval is [min of lower ends, min of upper ends].
Ball ball_min(const Ball& a, const Ball& b);

enum class Comparison { certainly_less, certainly_greater, overlapping };

Comparison ball_compare(const Ball& a, const Ball& b);

/// True when both balls have zero radius and identical midpoints.
bool certainly_equal(const Ball& a, const Ball& b);

/// Largest radius of the given balls, rounded up to a double.
double max_radius(const Ball& a, const Ball& b);

}  // namespace harmonic
