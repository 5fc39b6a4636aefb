#include "harmonic/bigmath/ball.hpp"

#include <algorithm>
#include <utility>

#include "harmonic/error.hpp"

namespace harmonic {

// ---------------------------------------------------------------------------
// BigFloat

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : owns_(other.owns_) {
  value_[0] = other.value_[0];
  other.owns_ = false;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this == &other) return *this;
  if (!owns_) {
    mpfr_init2(value_, other.bits());
    owns_ = true;
  } else {
    mpfr_set_prec(value_, other.bits());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this == &other) return *this;
  release();
  value_[0] = other.value_[0];
  owns_ = other.owns_;
  other.owns_ = false;
  return *this;
}

BigFloat::~BigFloat() { release(); }

void BigFloat::release() {
  if (owns_) mpfr_clear(value_);
  owns_ = false;
}

// ---------------------------------------------------------------------------
// Internal helpers

class BallAccess {
 public:
  static mpfr_ptr mid(Ball& b) { return b.mid_.get(); }
  static mpfr_ptr rad(Ball& b) { return b.rad_.get(); }
};

namespace {

constexpr mpfr_prec_t kRadBits = Ball::kRadiusBits;

void ensure_finite(Ball& b) {
  if (!mpfr_number_p(BallAccess::mid(b)) || !mpfr_number_p(BallAccess::rad(b))) {
    throw RangeError("ball overflowed the exponent range");
  }
}

// Adds one ulp of `mid` to `rad` when the midpoint computation was inexact.
void add_rounding_error(mpfr_ptr rad, mpfr_srcptr mid, int ternary) {
  if (ternary == 0) return;
  if (mpfr_zero_p(mid)) throw RangeError("midpoint underflow");
  BigFloat ulp(kRadBits);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid) - mpfr_get_prec(mid), MPFR_RNDU);
  mpfr_add(rad, rad, ulp.get(), MPFR_RNDU);
}

BigFloat abs_rounded(mpfr_srcptr x, mpfr_rnd_t rnd) {
  BigFloat out(kRadBits);
  mpfr_abs(out.get(), x, rnd);
  return out;
}

mpq_class to_q(mpfr_srcptr x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

template <typename Fn>
Ball monotone_increasing(const Ball& a, Precision p, Fn&& fn) {
  const BigFloat lo = a.lower();
  const BigFloat hi = a.upper();
  BigFloat flo(p.bits());
  BigFloat fhi(p.bits());
  fn(flo.get(), lo.get(), MPFR_RNDD);
  fn(fhi.get(), hi.get(), MPFR_RNDU);
  if (!mpfr_number_p(flo.get()) || !mpfr_number_p(fhi.get())) {
    throw RangeError("function value outside the exponent range");
  }
  return Ball::from_endpoints(flo.get(), fhi.get(), p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Ball

Ball::Ball(Precision p) : precision_(p), mid_(p.bits()), rad_(kRadBits) {}

Ball Ball::from_int(long value, Precision p) {
  Ball b(p);
  const int t = mpfr_set_si(b.mid_.get(), value, MPFR_RNDN);
  add_rounding_error(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball Ball::from_u64(unsigned long value, Precision p) {
  Ball b(p);
  const int t = mpfr_set_ui(b.mid_.get(), value, MPFR_RNDN);
  add_rounding_error(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball Ball::from_rational(const Rational& value, Precision p) {
  Ball b(p);
  const int t = mpfr_set_q(b.mid_.get(), value.raw().get_mpq_t(), MPFR_RNDN);
  add_rounding_error(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball Ball::from_double(double mid, double rad, Precision p) {
  if (!(rad >= 0.0)) throw DomainError("ball radius must be nonnegative");
  Ball b(p);
  mpfr_set_d(b.mid_.get(), mid, MPFR_RNDN);
  mpfr_set_d(b.rad_.get(), rad, MPFR_RNDU);
  ensure_finite(b);
  return b;
}

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, Precision p) {
  if (mpfr_cmp(lo, hi) > 0) std::swap(lo, hi);
  Ball b(p);
  mpfr_add(b.mid_.get(), lo, hi, MPFR_RNDN);
  mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
  BigFloat up(kRadBits);
  BigFloat down(kRadBits);
  mpfr_sub(up.get(), hi, b.mid_.get(), MPFR_RNDU);
  mpfr_sub(down.get(), b.mid_.get(), lo, MPFR_RNDU);
  mpfr_max(b.rad_.get(), up.get(), down.get(), MPFR_RNDU);
  if (mpfr_sgn(b.rad_.get()) < 0) mpfr_set_zero(b.rad_.get(), 1);
  ensure_finite(b);
  return b;
}

double Ball::mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
double Ball::rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

BigFloat Ball::lower() const {
  BigFloat out(precision_.bits());
  mpfr_sub(out.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return out;
}

BigFloat Ball::upper() const {
  BigFloat out(precision_.bits());
  mpfr_add(out.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return out;
}

bool Ball::is_positive() const {
  return mpfr_sgn(mid_.get()) > 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool Ball::is_negative() const {
  return mpfr_sgn(mid_.get()) < 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool Ball::contains(const Rational& value) const {
  mpq_class d = value.raw() - to_q(mid_.get());
  return ::abs(d) <= to_q(rad_.get());
}

bool Ball::contains(const Ball& other) const {
  mpq_class d = to_q(other.mid_.get()) - to_q(mid_.get());
  return ::abs(d) + to_q(other.rad_.get()) <= to_q(rad_.get());
}

bool Ball::overlaps(const Ball& other) const {
  mpq_class d = to_q(other.mid_.get()) - to_q(mid_.get());
  return ::abs(d) <= to_q(rad_.get()) + to_q(other.rad_.get());
}

Ball Ball::with_precision(Precision p) const {
  Ball b(p);
  const int t = mpfr_set(b.mid_.get(), mid_.get(), MPFR_RNDN);
  mpfr_set(b.rad_.get(), rad_.get(), MPFR_RNDU);
  add_rounding_error(b.rad_.get(), b.mid_.get(), t);
  return b;
}

Ball Ball::widened(mpfr_srcptr extra) const {
  if (mpfr_sgn(extra) < 0) throw DomainError("cannot widen by a negative amount");
  Ball b(*this);
  mpfr_add(b.rad_.get(), b.rad_.get(), extra, MPFR_RNDU);
  ensure_finite(b);
  return b;
}

Ball Ball::operator-() const {
  Ball b(*this);
  mpfr_neg(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
  return b;
}

// ---------------------------------------------------------------------------
// Arithmetic

Ball add(const Ball& a, const Ball& b, Precision p) {
  Ball r(p);
  const int t = mpfr_add(BallAccess::mid(r), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(BallAccess::rad(r), a.rad(), b.rad(), MPFR_RNDU);
  add_rounding_error(BallAccess::rad(r), r.mid(), t);
  ensure_finite(r);
  return r;
}

Ball sub(const Ball& a, const Ball& b, Precision p) {
  Ball r(p);
  const int t = mpfr_sub(BallAccess::mid(r), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(BallAccess::rad(r), a.rad(), b.rad(), MPFR_RNDU);
  add_rounding_error(BallAccess::rad(r), r.mid(), t);
  ensure_finite(r);
  return r;
}

Ball mul(const Ball& a, const Ball& b, Precision p) {
  Ball r(p);
  const int t = mpfr_mul(BallAccess::mid(r), a.mid(), b.mid(), MPFR_RNDN);
  // |a.mid| b.rad + |b.mid| a.rad + a.rad b.rad
  mpfr_ptr rad = BallAccess::rad(r);
  BigFloat term(kRadBits);
  mpfr_mul(rad, abs_rounded(a.mid(), MPFR_RNDU).get(), b.rad(), MPFR_RNDU);
  mpfr_mul(term.get(), abs_rounded(b.mid(), MPFR_RNDU).get(), a.rad(), MPFR_RNDU);
  mpfr_add(rad, rad, term.get(), MPFR_RNDU);
  mpfr_mul(term.get(), a.rad(), b.rad(), MPFR_RNDU);
  mpfr_add(rad, rad, term.get(), MPFR_RNDU);
  add_rounding_error(rad, r.mid(), t);
  ensure_finite(r);
  return r;
}

Ball div(const Ball& a, const Ball& b, Precision p) {
  if (b.contains_zero()) throw EnclosureError("division by a ball containing zero");
  Ball r(p);
  const int t = mpfr_div(BallAccess::mid(r), a.mid(), b.mid(), MPFR_RNDN);
  // (|a.mid| b.rad + |b.mid| a.rad) / (|b.mid| (|b.mid| - b.rad))
  mpfr_ptr rad = BallAccess::rad(r);
  if (!a.is_exact() || !b.is_exact()) {
    BigFloat num(kRadBits);
    BigFloat term(kRadBits);
    mpfr_mul(num.get(), abs_rounded(a.mid(), MPFR_RNDU).get(), b.rad(), MPFR_RNDU);
    mpfr_mul(term.get(), abs_rounded(b.mid(), MPFR_RNDU).get(), a.rad(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), term.get(), MPFR_RNDU);

    BigFloat den(kRadBits);
    BigFloat bmin(kRadBits);
    BigFloat babs(b.precision().bits());
    mpfr_abs(babs.get(), b.mid(), MPFR_RNDN);
    mpfr_sub(bmin.get(), babs.get(), b.rad(), MPFR_RNDD);
    mpfr_mul(den.get(), abs_rounded(b.mid(), MPFR_RNDD).get(), bmin.get(), MPFR_RNDD);
    mpfr_div(rad, num.get(), den.get(), MPFR_RNDU);
  }
  add_rounding_error(rad, r.mid(), t);
  ensure_finite(r);
  return r;
}

Ball ball_arith(const Ball& a, const Ball& b, BallOp op, Precision p) {
  switch (op) {
    case BallOp::add: return add(a, b, p);
    case BallOp::sub: return sub(a, b, p);
    case BallOp::mul: return mul(a, b, p);
    case BallOp::div: return div(a, b, p);
  }
  throw DomainError("unknown ball op");
}

Ball operator+(const Ball& a, const Ball& b) { return add(a, b, max(a.precision(), b.precision())); }
Ball operator-(const Ball& a, const Ball& b) { return sub(a, b, max(a.precision(), b.precision())); }
Ball operator*(const Ball& a, const Ball& b) { return mul(a, b, max(a.precision(), b.precision())); }
Ball operator/(const Ball& a, const Ball& b) { return div(a, b, max(a.precision(), b.precision())); }

// ---------------------------------------------------------------------------
// Elementary functions: evaluated at the interval endpoints with directed
// rounding, which is sound for monotone functions.

Ball ball_ln(const Ball& a, Precision p) {
  if (!a.is_positive()) throw DomainError("ln of an interval that is not strictly positive");
  return monotone_increasing(a, p, [](mpfr_ptr out, mpfr_srcptr x, mpfr_rnd_t rnd) {
    mpfr_log(out, x, rnd);
  });
}

Ball ball_exp(const Ball& a, Precision p) {
  return monotone_increasing(a, p, [](mpfr_ptr out, mpfr_srcptr x, mpfr_rnd_t rnd) {
    mpfr_exp(out, x, rnd);
  });
}

Ball ball_sqrt(const Ball& a, Precision p) {
  if (mpfr_sgn(a.lower().get()) < 0) throw DomainError("sqrt of an interval with negative part");
  return monotone_increasing(a, p, [](mpfr_ptr out, mpfr_srcptr x, mpfr_rnd_t rnd) {
    mpfr_sqrt(out, x, rnd);
  });
}

Ball ball_pi(Precision p) {
  BigFloat lo(p.bits());
  BigFloat hi(p.bits());
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Ball::from_endpoints(lo.get(), hi.get(), p);
}

Ball ball_from_rational(const Rational& a, Precision p) { return Ball::from_rational(a, p); }

Ball ball_abs(const Ball& a) {
  if (a.is_negative()) return -a;
  if (a.is_positive()) return a;
  BigFloat zero(a.precision().bits());
  BigFloat hi(a.precision().bits());
  mpfr_abs(hi.get(), a.mid(), MPFR_RNDN);
  mpfr_add(hi.get(), hi.get(), a.rad(), MPFR_RNDU);
  return Ball::from_endpoints(zero.get(), hi.get(), a.precision());
}

Ball ball_sqr(const Ball& a) {
  if (!a.contains_zero()) return a * a;
  const Ball m = ball_abs(a);
  return m * m;
}

Ball ball_inverse(const Ball& a) { return Ball::from_int(1, a.precision()) / a; }

Ball ball_pow(const Ball& a, unsigned exponent) {
  Ball result = Ball::from_int(1, a.precision());
  Ball base = a;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Ball ball_hull(const Ball& a, const Ball& b) {
  const Precision p = max(a.precision(), b.precision());
  BigFloat lo = a.lower();
  BigFloat hi = a.upper();
  const BigFloat blo = b.lower();
  const BigFloat bhi = b.upper();
  if (mpfr_cmp(blo.get(), lo.get()) < 0) lo = blo;
  if (mpfr_cmp(bhi.get(), hi.get()) > 0) hi = bhi;
  return Ball::from_endpoints(lo.get(), hi.get(), p);
}

Ball ball_min(const Ball& a, const Ball& b) {
  const Precision p = max(a.precision(), b.precision());
  BigFloat lo = a.lower();
  BigFloat hi = a.upper();
  const BigFloat blo = b.lower();
  const BigFloat bhi = b.upper();
  if (mpfr_cmp(blo.get(), lo.get()) < 0) lo = blo;
  if (mpfr_cmp(bhi.get(), hi.get()) < 0) hi = bhi;
  return Ball::from_endpoints(lo.get(), hi.get(), p);
}

Comparison ball_compare(const Ball& a, const Ball& b) {
  // Exact test of a.hi < b.lo, i.e. b.mid - a.mid > a.rad + b.rad.
  const mpq_class d = to_q(b.mid()) - to_q(a.mid());
  const mpq_class s = to_q(a.rad()) + to_q(b.rad());
  if (d > s) return Comparison::certainly_less;
  if (-d > s) return Comparison::certainly_greater;
  return Comparison::overlapping;
}

bool certainly_equal(const Ball& a, const Ball& b) {
  return a.is_exact() && b.is_exact() && mpfr_equal_p(a.mid(), b.mid()) != 0;
}

double max_radius(const Ball& a, const Ball& b) { return std::max(a.rad_double(), b.rad_double()); }

}  // namespace harmonic
