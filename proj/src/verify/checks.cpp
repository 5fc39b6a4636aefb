#include "harmonic/verify/checks.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <string>

#include "harmonic/error.hpp"
#include "harmonic/specfun/euler_maclaurin.hpp"
#include "harmonic/verify/polynomial.hpp"

namespace harmonic {

namespace {

using ParamList = std::vector<Param>;

Rational nrat(std::uint64_t n) { return Rational(static_cast<long>(n)); }

Param int_param(std::string key, std::uint64_t v) {
  return {std::move(key), static_cast<std::int64_t>(v)};
}

// Bits lost to cancellation when a quantity of size ~1/n^k is formed from
// O(1) terms.
std::uint32_t cancellation_bits(std::uint64_t n, unsigned k) {
  return k * static_cast<std::uint32_t>(std::bit_width(n)) + 16;
}

/// What a claim evaluates to at one precision.
struct Attempt {
  Ball margin;                // positive when the claim holds
  std::optional<Ball> value;  // shown alongside the verdict
};

using AttemptFn = std::function<Attempt(Precision)>;

// Claim "margin > 0". Undecided attempts are repeated at doubled precision up
// to the cap; an EnclosureError at some precision counts as undecided there.
Record certify_positive(std::string check, ParamList params, const AttemptFn& attempt,
                        Precision p) {
  Record r;
  r.check = std::move(check);
  r.params = std::move(params);
  for (Precision cur = p; !cur.above_cap(); cur = cur.doubled()) {
    r.precision_bits = cur.bits();
    try {
      Attempt a = attempt(cur);
      r.margin = a.margin;
      r.value = std::move(a.value);
      if (a.margin.is_positive()) {
        r.verdict = Verdict::pass;
        return r;
      }
      if (a.margin.is_negative() || certainly_equal(a.margin, Ball(cur))) {
        r.verdict = Verdict::fail;
        return r;
      }
    } catch (const EnclosureError&) {
    }
  }
  r.verdict = Verdict::undecided;
  return r;
}

// Claim "two enclosures of the same real agree": pass once they overlap with
// both radii below kEqualityRadius, fail if they are disjoint.
Record certify_agreement(std::string check, ParamList params,
                         const std::function<std::pair<Ball, Ball>(Precision)>& pair_at,
                         Precision p) {
  Record r;
  r.check = std::move(check);
  r.params = std::move(params);
  for (Precision cur = p; !cur.above_cap(); cur = cur.doubled()) {
    r.precision_bits = cur.bits();
    auto [a, b] = pair_at(cur);
    r.value = a;
    r.margin = sub(a, b, cur);
    if (!a.overlaps(b)) {
      r.verdict = Verdict::fail;
      return r;
    }
    if (max_radius(a, b) < kEqualityRadius) {
      r.verdict = Verdict::pass;
      return r;
    }
  }
  r.verdict = Verdict::undecided;
  return r;
}

Record algebra_record(std::string name, bool holds) {
  Record r;
  r.check = "equality_algebra";
  r.params = {{"identity", std::move(name)}};
  r.verdict = holds ? Verdict::pass : Verdict::fail;
  return r;
}

// ln n + 1/(2n) - psi(n+1), which equals gamma + ln n + 1/(2n) - H(n).
Ball f_denominator(std::uint64_t n, Precision w, const HarmonicSums* sums) {
  return -target_value(Target::H_minus_ln_half_n_gamma, n, w, sums);
}

Ball f_from_denominator(const Ball& den, std::uint64_t n, Precision w) {
  if (!den.is_positive()) throw EnclosureError("f denominator not certainly positive");
  return sub(ball_inverse(den), Ball::from_rational(12 * nrat(n) * nrat(n), w), w);
}

Precision f_work(std::uint64_t n, Precision p) { return p.plus(cancellation_bits(n, 4)); }

// 2(7 - 12 gamma)/(2 gamma - 1), 4(48L - 61)/(5 - 4L) and 3(108L - 181)/(5 - 3L)
// with L = gamma + ln n.
Ball f_closed_form(std::uint64_t n, Precision p) {
  const Ball g = euler_gamma(p);
  auto c = [p](long v) { return Ball::from_int(v, p); };
  if (n == 1) {
    return div(mul(c(2), sub(c(7), mul(c(12), g, p), p), p), sub(mul(c(2), g, p), c(1), p), p);
  }
  const Ball big_l = add(g, ball_ln(c(static_cast<long>(n)), p), p);
  if (n == 2) {
    return div(mul(c(4), sub(mul(c(48), big_l, p), c(61), p), p),
               sub(c(5), mul(c(4), big_l, p), p), p);
  }
  if (n == 3) {
    return div(mul(c(3), sub(mul(c(108), big_l, p), c(181), p), p),
               sub(c(5), mul(c(3), big_l, p), p), p);
  }
  throw DomainError("closed forms of f are known for n <= 3");
}

// Four-decimal truncations of f(1), f(2), f(3).
const Rational kFPrefix[] = {Rational(9507, 10000), Rational(11090, 10000), Rational(11549, 10000)};
const Rational kFPrefixUnit(1, 10000);

Rational six_fifths() { return Rational(6, 5); }

// Smaller of x - lo and hi - x: positive iff lo < x < hi.
Ball window_margin(const Ball& x, const Rational& lo, const Rational& hi, Precision p) {
  return ball_min(sub(x, Ball::from_rational(lo, p), p), sub(Ball::from_rational(hi, p), x, p));
}

std::vector<std::uint64_t> decade_samples(std::uint64_t max_n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 10; n <= max_n; n *= 10) out.push_back(n);
  if (out.empty() || out.back() != max_n) out.push_back(max_n);
  return out;
}

}  // namespace

Ball f_eval(std::uint64_t n, Precision p) {
  if (n == 0) throw DomainError("f is evaluated for n >= 1");
  for (Precision w = f_work(n, p); !w.above_cap(); w = w.doubled()) {
    const Ball den = f_denominator(n, w, nullptr);
    if (den.is_positive()) return f_from_denominator(den, n, w).with_precision(p);
  }
  throw EnclosureError("f(n): denominator still straddles zero at the precision cap");
}

Ball f_eval(const Ball& x, Precision p) {
  if (ball_compare(x, Ball::from_int(1, p)) == Comparison::certainly_less) {
    throw DomainError("f is evaluated for x >= 1");
  }
  for (Precision w = p.plus(64); !w.above_cap(); w = w.doubled()) {
    const Ball xw = x.with_precision(w);
    const Ball one = Ball::from_int(1, w);
    Ball den = add(ball_ln(xw, w), ball_inverse(add(xw, xw, w)), w);
    den = sub(den, digamma(add(xw, one, w), w), w);
    if (!den.is_positive()) continue;
    return sub(ball_inverse(den), mul(Ball::from_int(12, w), ball_sqr(xw), w), w).with_precision(p);
  }
  throw EnclosureError("f(x): denominator still straddles zero at the precision cap");
}

Ball g_eval(const Ball& x, Precision p) {
  if (!x.is_positive()) throw DomainError("g needs x > 0");
  const Precision w = p.plus(64);
  const Ball xw = x.with_precision(w);
  const Ball one = Ball::from_int(1, w);
  const Ball x1 = add(xw, one, w);
  const Ball inv_x = ball_inverse(xw);
  const Ball half_inv_x = mul(Ball::from_rational(Rational(1, 2), w), inv_x, w);
  Ball v = sub(trigamma(x1, w), inv_x, w);
  v = add(v, mul(half_inv_x, inv_x, w), w);
  const Ball gap = sub(sub(digamma(x1, w), ball_ln(xw, w), w), half_inv_x, w);
  v = sub(v, mul(mul(Ball::from_int(24, w), xw, w), ball_sqr(gap), w), w);
  return v.with_precision(p);
}

Ball g_polynomial_bound(const Ball& x, Precision p) {
  const Ball x2 = ball_sqr(x);
  Ball num = mul(Ball::from_int(1659, p), ball_sqr(x2), p);
  num = sub(num, mul(Ball::from_int(8400, p), x2, p), p);
  num = sub(num, Ball::from_int(100, p), p);
  return div(num, mul(Ball::from_int(264600, p), ball_pow(x, 11), p), p);
}

Ball epsilon_n(std::uint64_t n, Precision p) {
  if (n == 0) throw DomainError("eps_n is defined for n >= 1");
  const Precision w = p.plus(cancellation_bits(n, 4));
  const Rational n2 = nrat(n) * nrat(n);
  const Ball t = target_value(Target::H_minus_ln_half_n_gamma, n, w);
  const Ball s = add(t, Ball::from_rational(Rational(1) / (12 * n2), w), w);
  return mul(Ball::from_rational(120 * n2 * n2, w), s, w).with_precision(p);
}

Ball alt_tail_x(std::uint64_t n, Precision p) {
  if (n == 0) throw DomainError("x_n is defined for n >= 1");
  const Precision w = p.plus(cancellation_bits(n, 2));
  const Ball tail = alternating_tail(n, w);
  return sub(ball_inverse(tail), Ball::from_u64(2 * n, w), w).with_precision(p);
}

VerificationReport sharpness_main(std::uint64_t max_n, Precision p) {
  if (max_n < 3) throw DomainError("sharpness check needs max_n >= 3");
  VerificationReport report;

  // One table of f(1..max_n) at a precision that absorbs the cancellation at
  // max_n; comparisons that stay undecided recompute at higher precision.
  const Precision w = f_work(max_n, p);
  const HarmonicSums sums(max_n, w);
  std::vector<std::optional<Ball>> table(max_n + 1);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const Ball den = f_denominator(n, w, &sums);
    if (den.is_positive()) table[n] = f_from_denominator(den, n, w);
  }
  auto f_at = [&](std::uint64_t n, Precision cur) -> Ball {
    if (cur == p && n <= max_n && table[n]) return *table[n];
    return f_eval(n, cur);
  };

  for (std::uint64_t n = 1; n <= 3; ++n) {
    const Rational& lo = kFPrefix[n - 1];
    report.add(certify_positive(
        "f_value", {int_param("n", n)},
        [&, n](Precision cur) {
          const Ball f = f_at(n, cur);
          return Attempt{window_margin(f, lo, lo + kFPrefixUnit, cur), f};
        },
        p));
  }
  for (std::uint64_t n = 1; n <= 3; ++n) {
    report.add(certify_agreement(
        "f_closed_form", {int_param("n", n)},
        [&, n](Precision cur) {
          return std::pair{f_at(n, cur), f_closed_form(n, cur.plus(16))};
        },
        p));
  }
  for (std::uint64_t n = 1; n < max_n; ++n) {
    report.add(certify_positive(
        "monotone", {int_param("n", n)},
        [&, n](Precision cur) {
          return Attempt{sub(f_at(n + 1, cur), f_at(n, cur), cur), std::nullopt};
        },
        p));
  }
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    report.add(certify_positive(
        "below_limit", {int_param("n", n)},
        [&, n](Precision cur) {
          const Ball f = f_at(n, cur);
          return Attempt{sub(Ball::from_rational(six_fifths(), cur), f, cur), f};
        },
        p));
  }

  std::vector<std::uint64_t> samples{1, 2, 3};
  for (std::uint64_t n : {10, 100, 1000, 10000}) {
    if (n <= max_n) samples.push_back(n);
  }
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const std::uint64_t a = samples[i];
    const std::uint64_t b = samples[i + 1];
    report.add(certify_positive(
        "margin_decreasing", {int_param("n", a), int_param("next", b)},
        [&, a, b](Precision cur) {
          const Ball limit = Ball::from_rational(six_fifths(), cur);
          const Ball gap_a = sub(limit, f_at(a, cur), cur);
          const Ball gap_b = sub(limit, f_at(b, cur), cur);
          return Attempt{sub(gap_a, gap_b, cur), gap_b};
        },
        p));
  }

  const std::pair<std::uint64_t, Rational> thresholds[] = {{1000, Rational(1, 1000000)},
                                                           {10000, Rational(1, 100000000)}};
  for (const auto& [n, eps] : thresholds) {
    report.add(certify_positive(
        "limit_margin", {int_param("n", n)},
        [&, n = n, eps = eps](Precision cur) {
          const Ball gap = sub(Ball::from_rational(six_fifths(), cur), f_at(n, cur), cur);
          return Attempt{sub(Ball::from_rational(eps, cur), ball_abs(gap), cur), gap};
        },
        p));
  }
  return report;
}

VerificationReport g_positivity(const std::vector<Rational>& grid, Precision p) {
  for (const Rational& x : grid) {
    if (x < Rational(3)) throw DomainError("g positivity grid points must be >= 3");
  }
  VerificationReport report;
  const Polynomial poly({Rational(-100), Rational(0), Rational(-8400), Rational(0), Rational(1659)});

  for (const Rational& x : grid) {
    const ParamList params{{"x", x.to_string()}};
    report.add(certify_positive(
        "g_direct", params,
        [&](Precision cur) {
          const Ball g = g_eval(Ball::from_rational(x, cur), cur);
          return Attempt{g, g};
        },
        p));
    report.add(certify_positive(
        "g_dominates_bound", params,
        [&](Precision cur) {
          const Ball xb = Ball::from_rational(x, cur.plus(64));
          const Ball g = g_eval(xb, cur.plus(64));
          return Attempt{sub(g, g_polynomial_bound(xb, cur.plus(64)), cur.plus(64)), g};
        },
        p));
    Record exact;
    exact.check = "g_polynomial";
    exact.params = params;
    const Rational v = poly.evaluate(x);
    exact.verdict = v.sign() > 0 ? Verdict::pass : Verdict::fail;
    exact.margin = Ball::from_rational(v, p);
    exact.value = exact.margin;
    exact.detail = v.to_string();
    report.add(std::move(exact));
  }

  // 1659x^4 - 8400x^2 - 100 expanded around 3: every coefficient positive
  // means the polynomial is positive on [3, inf).
  const Polynomial at3 = poly.shifted(Rational(3));
  bool all_positive = at3.degree() == 4;
  std::string coeffs;
  for (const Rational& c : at3.coeffs()) {
    all_positive = all_positive && c.sign() > 0;
    coeffs = c.to_string() + (coeffs.empty() ? "" : ",") + coeffs;
  }
  Record shift;
  shift.check = "g_polynomial_shift";
  shift.params = {{"x0", std::int64_t{3}}};
  shift.verdict = all_positive ? Verdict::pass : Verdict::fail;
  shift.detail = coeffs;
  shift.value = Ball::from_rational(at3.evaluate(Rational(0)), p);
  report.add(std::move(shift));
  return report;
}

VerificationReport epsilon_window(std::uint64_t max_n, Precision p) {
  if (max_n == 0) throw DomainError("epsilon window needs max_n >= 1");
  VerificationReport report;
  const Precision w = p.plus(cancellation_bits(max_n, 4));
  const HarmonicSums sums(max_n, w);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    report.add(certify_positive(
        "epsilon", {int_param("n", n)},
        [&, n](Precision cur) {
          Ball eps(cur);
          if (cur == p) {
            const Rational n2 = nrat(n) * nrat(n);
            const Ball t = target_value(Target::H_minus_ln_half_n_gamma, n, w, &sums);
            const Ball s = add(t, Ball::from_rational(Rational(1) / (12 * n2), w), w);
            eps = mul(Ball::from_rational(120 * n2 * n2, w), s, w);
          } else {
            eps = epsilon_n(n, cur);
          }
          return Attempt{window_margin(eps, Rational(0), Rational(1), eps.precision()), eps};
        },
        p));
  }
  return report;
}

BoundEnclosures implied_harmonic_interval(std::string_view id, std::uint64_t n, Precision p) {
  const BoundSpec& spec = find_bound(id);
  const BoundEnclosures b = evaluate_bound(id, n, p);
  const Ball offset = harmonic_offset(spec.target, n, p);
  return {add(b.lower, offset, p), add(b.upper, offset, p)};
}

VerificationReport refinement_check(std::uint64_t max_n, Precision p) {
  if (max_n < 2) throw DomainError("refinement check needs max_n >= 2");
  VerificationReport report;
  for (const std::string& id : refinement_targets()) {
    for (std::uint64_t n = 2; n <= max_n; ++n) {
      report.add(certify_positive(
          "refinement", {{"id", id}, int_param("n", n)},
          [&, n](Precision cur) {
            const BoundEnclosures inner = implied_harmonic_interval("main", n, cur);
            const BoundEnclosures outer = implied_harmonic_interval(id, n, cur);
            return Attempt{ball_min(sub(inner.lower, outer.lower, cur),
                                    sub(outer.upper, inner.upper, cur)),
                           std::nullopt};
          },
          p));
    }
  }
  return report;
}

VerificationReport alt_tail_constants(std::uint64_t max_n, Precision p) {
  if (max_n < 2) throw DomainError("alternating tail check needs max_n >= 2");
  VerificationReport report;

  const Precision w = p.plus(cancellation_bits(max_n, 2));
  const HarmonicSums sums(max_n, w);
  auto x_at = [&](std::uint64_t n, Precision cur) -> Ball {
    if (cur == p && n <= max_n) {
      const Ball tail = alternating_tail_from(sums.alternating(n), n, w);
      return sub(ball_inverse(tail), Ball::from_u64(2 * n, w), w);
    }
    return alt_tail_x(n, cur);
  };

  report.add(certify_agreement(
      "x1_constant", {int_param("n", 1)},
      [&](Precision cur) {
        const Ball ln2 = ball_ln(Ball::from_int(2, cur), cur);
        const Ball a = sub(ball_inverse(sub(Ball::from_int(1, cur), ln2, cur)),
                           Ball::from_int(2, cur), cur);
        return std::pair{x_at(1, cur), a};
      },
      p));
  for (std::uint64_t n = 1; n < max_n; ++n) {
    report.add(certify_positive(
        "x_decreasing", {int_param("n", n)},
        [&, n](Precision cur) {
          return Attempt{sub(x_at(n, cur), x_at(n + 1, cur), cur), std::nullopt};
        },
        p));
  }
  for (std::uint64_t n : decade_samples(max_n)) {
    report.add(certify_positive(
        "x_above_b", {int_param("n", n)},
        [&, n](Precision cur) {
          const Ball x = x_at(n, cur);
          return Attempt{sub(x, Ball::from_int(1, cur), cur), x};
        },
        p));
  }
  report.add(certify_positive(
      "x_limit_window", {int_param("n", 10000)},
      [&](Precision cur) {
        const Ball x = x_at(10000, cur);
        return Attempt{window_margin(x, Rational(1), Rational(1001, 1000), cur), x};
      },
      p));
  return report;
}

VerificationReport cm_spotcheck(StirlingKind kind, unsigned order, const Grid& grid,
                                unsigned depth, Precision p) {
  if (grid.count < 8) throw DomainError("complete monotonicity grid needs at least 8 points");
  if (grid.start.sign() <= 0 || grid.step.sign() <= 0) {
    throw DomainError("complete monotonicity grid must be increasing and positive");
  }
  if (depth > 6) throw DomainError("finite-difference depth is capped at 6");
  if (depth >= grid.count) throw DomainError("finite-difference depth exceeds the grid");

  // Samples are recomputed per precision and shared by all depths.
  std::vector<Ball> samples;
  Precision sampled_at(Precision::kMinBits);
  auto differences = [&](unsigned j, Precision cur) {
    if (samples.empty() || sampled_at != cur) {
      samples.clear();
      for (unsigned i = 0; i < grid.count; ++i) {
        const Rational x = grid.start + grid.step * Rational(static_cast<long>(i));
        samples.push_back(stirling_tail(kind, order, Ball::from_rational(x, cur), cur));
      }
      sampled_at = cur;
    }
    std::vector<Ball> d = samples;
    for (unsigned k = 0; k < j; ++k) {
      for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = sub(d[i], d[i + 1], cur);
      d.pop_back();
    }
    return d;  // (-1)^j Delta^j, since each pass takes d[i] - d[i+1]
  };

  const std::string kind_name = kind == StirlingKind::F ? "F" : "G";
  VerificationReport report;
  for (unsigned j = 0; j <= depth; ++j) {
    report.add(certify_positive(
        "cm",
        {{"kind", kind_name}, int_param("order", order), int_param("depth", j)},
        [&, j](Precision cur) {
          const std::vector<Ball> d = differences(j, cur);
          Ball least = d.front();
          for (const Ball& b : d) least = ball_min(least, b);
          return Attempt{least, std::nullopt};
        },
        p));
  }
  return report;
}

VerificationReport equality_algebra() {
  using RF = RationalFunction;
  const RF t = RF::variable();
  auto c = [](long num, long den = 1) { return RF(Rational(num, den)); };
  VerificationReport report;

  // Lower sides at n = 1, with t standing for gamma, ln 2, or the Chen inner
  // quantity 1 - gamma - ln(3/2).
  report.add(algebra_record("main_lower",
                            (-c(1) / (c(12) + c(2) * (c(7) - c(12) * t) / (c(2) * t - c(1))))
                                .identical_to((c(1) - c(2) * t) / c(2))));
  report.add(algebra_record("toth_sharp_lower",
                            (c(1) / (c(2) + (c(1) / (c(1) - t) - c(2)))).identical_to(c(1) - t)));
  report.add(algebra_record("alt_tail_lower",
                            (c(1) / (c(2) + (c(1) / (c(1) - t) - c(2)))).identical_to(c(1) - t)));
  // 24(1 + a)^2 = 1/t when (1 + a)^2 = 1/(24 t).
  report.add(algebra_record("chen_lower",
                            (c(1) / (c(24) * (c(1) / (c(24) * t)))).identical_to(t)));

  // f(1), f(2), f(3) from f(n) = 1/(L - c_n) - 12n^2, L = gamma + ln n.
  report.add(algebra_record("f1_closed_form",
                            (c(1) / (t - c(1, 2)) - c(12))
                                .identical_to(c(2) * (c(7) - c(12) * t) / (c(2) * t - c(1)))));
  report.add(algebra_record("f2_closed_form",
                            (c(1) / (t - c(5, 4)) - c(48))
                                .identical_to(c(4) * (c(48) * t - c(61)) / (c(5) - c(4) * t))));
  report.add(algebra_record("f3_closed_form",
                            (c(1) / (t - c(5, 3)) - c(108))
                                .identical_to(c(3) * (c(108) * t - c(181)) / (c(5) - c(3) * t))));

  // In the symbol x.
  const RF& x = t;
  auto pw = [&](unsigned k) {
    RF r = c(1);
    for (unsigned i = 0; i < k; ++i) r = r * x;
    return r;
  };
  const RF psi_lower_gap = (c(1260) * pw(5) + c(210) * pw(4) - c(21) * pw(2) + c(10)) / (c(2520) * pw(6));
  const RF gap_bound = (c(10) - c(21) * pw(2) + c(210) * pw(4)) / (c(2520) * pw(6));
  report.add(algebra_record("psi_gap_bound", (psi_lower_gap - c(1) / (c(2) * x)).identical_to(gap_bound)));

  const RF trigamma_lower =
      (c(210) * pw(8) + c(105) * pw(7) + c(35) * pw(6) - c(7) * pw(4) + c(5) * pw(2) - c(7)) /
      (c(210) * pw(9));
  const RF g_lower = trigamma_lower - c(1) / pw(2) - c(1) / x + c(1) / (c(2) * pw(2)) -
                     c(24) * x * gap_bound * gap_bound;
  const RF g_poly = (c(1659) * pw(4) - c(8400) * pw(2) - c(100)) / (c(264600) * pw(11));
  report.add(algebra_record("g_bound", g_lower.identical_to(g_poly)));

  const RF f_lower = c(1) / gap_bound - c(12) * pw(2);
  report.add(algebra_record(
      "f_lower_limit_form",
      f_lower.identical_to(c(12) * pw(2) * (c(21) * pw(2) - c(10)) /
                           (c(10) - c(21) * pw(2) + c(210) * pw(4)))));
  const RF psi_upper_gap =
      (c(2520) * pw(7) + c(420) * pw(6) - c(42) * pw(4) + c(20) * pw(2) - c(21)) / (c(5040) * pw(8));
  const RF f_upper = c(1) / (psi_upper_gap - c(1) / (c(2) * x)) - c(12) * pw(2);
  report.add(algebra_record(
      "f_upper_limit_form",
      f_upper.identical_to(c(12) * pw(2) * (c(42) * pw(4) - c(20) * pw(2) + c(21)) /
                           (c(420) * pw(6) - c(42) * pw(4) + c(20) * pw(2) - c(21)))));
  return report;
}

}  // namespace harmonic
