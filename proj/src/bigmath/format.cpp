#include "harmonic/bigmath/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <mpfr.h>

namespace harmonic {

namespace {

struct DigitString {
  bool negative = false;
  std::string digits;  // no sign, no leading zeros unless value is zero
  long exponent = 0;   // value = 0.digits * 10^exponent
};

DigitString get_digits(mpfr_srcptr x, std::size_t count, mpfr_rnd_t rnd) {
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, count, x, rnd);
  DigitString out;
  std::string s(raw);
  mpfr_free_str(raw);
  if (!s.empty() && s[0] == '-') {
    out.negative = true;
    s.erase(0, 1);
  }
  out.digits = s;
  out.exponent = e;
  return out;
}

mpq_class digits_value(const DigitString& d) {
  mpz_class num(d.digits);
  mpz_class scale;
  const long shift = d.exponent - static_cast<long>(d.digits.size());
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  mpq_class q = shift >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  return d.negative ? mpq_class(-q) : q;
}

std::string render(DigitString d, bool strip_zeros) {
  if (strip_zeros) {
    while (d.digits.size() > 1 && d.digits.back() == '0') d.digits.pop_back();
  }
  if (d.digits.find_first_not_of('0') == std::string::npos) return "0";
  std::string body;
  const long len = static_cast<long>(d.digits.size());
  const long e = d.exponent;
  if (e >= -4 && e <= 21) {
    if (e <= 0) {
      body = "0." + std::string(static_cast<std::size_t>(-e), '0') + d.digits;
    } else if (e < len) {
      body = d.digits.substr(0, e) + "." + d.digits.substr(e);
    } else {
      body = d.digits + std::string(static_cast<std::size_t>(e - len), '0');
    }
  } else {
    body = d.digits.substr(0, 1);
    if (len > 1) body += "." + d.digits.substr(1);
    body += "e" + std::to_string(e - 1);
  }
  return d.negative ? "-" + body : body;
}

}  // namespace

DecimalBall to_decimal(const Ball& b) {
  const auto max_digits =
      static_cast<long>(std::ceil(static_cast<double>(b.precision().bits()) * 0.30103)) + 2;
  long digits = max_digits;
  if (!b.is_exact() && !mpfr_zero_p(b.mid())) {
    const long mid_exp = mpfr_get_exp(b.mid());
    const long rad_exp = mpfr_get_exp(b.rad());
    const long bits = std::max(0L, mid_exp - rad_exp);
    digits = std::clamp(static_cast<long>(std::ceil(static_cast<double>(bits) * 0.30103)) + 3, 6L,
                        max_digits);
  }

  DecimalBall out;
  DigitString mid = get_digits(b.mid(), static_cast<std::size_t>(digits), MPFR_RNDN);
  mpq_class mid_exact;
  mpfr_get_q(mid_exact.get_mpq_t(), b.mid());
  const mpq_class print_error = abs(digits_value(mid) - mid_exact);

  BigFloat rad(Ball::kRadiusBits + 2);
  mpfr_set(rad.get(), b.rad(), MPFR_RNDU);
  if (print_error != 0) {
    BigFloat err(Ball::kRadiusBits);
    mpfr_set_q(err.get(), print_error.get_mpq_t(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), err.get(), MPFR_RNDU);
  }

  const bool exact = mpfr_zero_p(rad.get()) != 0;
  out.mid = render(mid, exact);
  out.rad = exact ? "0" : render(get_digits(rad.get(), 3, MPFR_RNDU), false);
  return out;
}

std::string format_ball(const Ball& b) {
  const DecimalBall d = to_decimal(b);
  return d.mid + " +/- " + d.rad;
}

}  // namespace harmonic
