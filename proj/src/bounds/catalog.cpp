#include "harmonic/bounds/catalog.hpp"

#include <algorithm>

#include "harmonic/error.hpp"
#include "harmonic/specfun/euler_maclaurin.hpp"

namespace harmonic {

namespace {

Ball nball(std::uint64_t n, Precision p) { return Ball::from_u64(n, p); }

Rational nrat(std::uint64_t n) { return Rational(static_cast<long>(n)); }

Ball exact(const Rational& r, Precision p) { return Ball::from_rational(r, p); }

Ball one(Precision p) { return Ball::from_int(1, p); }

Ball ln_of(const Rational& r, Precision p) { return ball_ln(exact(r, p), p); }

// 2(7 - 12 gamma) / (2 gamma - 1)
Ball main_lower_constant(Precision p) {
  const Ball g = euler_gamma(p);
  const Ball num = mul(Ball::from_int(2, p), sub(Ball::from_int(7, p), mul(Ball::from_int(12, p), g, p), p), p);
  const Ball den = sub(mul(Ball::from_int(2, p), g, p), one(p), p);
  return div(num, den, p);
}

// 1/(1 - gamma) - 2, equal to (2 gamma - 1)/(1 - gamma)
Ball toth_sharp_constant(Precision p) {
  return sub(ball_inverse(sub(one(p), euler_gamma(p), p)), Ball::from_int(2, p), p);
}

// 1/(1 - ln 2) - 2
Ball alt_tail_constant(Precision p) {
  return sub(ball_inverse(sub(one(p), ln_of(2, p), p)), Ball::from_int(2, p), p);
}

// 1 + ln(sqrt(e) - 1)
Ball batir_constant(Precision p) {
  const Ball sqrt_e = ball_sqrt(ball_exp(one(p), p), p);
  return add(one(p), ball_ln(sub(sqrt_e, one(p), p), p), p);
}

// 1/(2 sqrt(6 [1 - gamma - ln(3/2)])) - 1; the commonly quoted shift omits the -1.
Ball chen_constant(Precision p) {
  Ball inner = sub(one(p), euler_gamma(p), p);
  inner = sub(inner, ln_of(Rational(3, 2), p), p);
  const Ball root = ball_sqrt(mul(Ball::from_int(6, p), inner, p), p);
  return sub(ball_inverse(mul(Ball::from_int(2, p), root, p)), one(p), p);
}

// e^(1 - gamma) - 1
Ball qi_guo_constant(Precision p) {
  return sub(ball_exp(sub(one(p), euler_gamma(p), p), p), one(p), p);
}

// -ln(e^(1/(n+1)) - 1)
Ball batir_common(std::uint64_t n, Precision p) {
  const Ball e = ball_exp(exact(Rational(1) / nrat(n + 1), p), p);
  return -ball_ln(sub(e, one(p), p), p);
}

SharpConstant rational_constant(std::string name, const Rational& value) {
  return {std::move(name), value.to_string(), value, value,
          [value](Precision p) { return Ball::from_rational(value, p); }};
}

SharpConstant decimal_constant(std::string name, std::string expression, const char* lo,
                               const char* hi, std::function<Ball(Precision)> fn) {
  return {std::move(name), std::move(expression), Rational::parse(lo), Rational::parse(hi),
          std::move(fn)};
}

std::vector<BoundSpec> build_catalog() {
  std::vector<BoundSpec> out;

  out.push_back(BoundSpec{
      "franel", Target::H_minus_ln_gamma,
      {[](std::uint64_t n, Precision p) {
         const Rational r = Rational(1) / (2 * nrat(n)) - Rational(1) / (8 * nrat(n) * nrat(n));
         return exact(r, p);
       }, {}},
      {[](std::uint64_t n, Precision p) { return exact(Rational(1) / (2 * nrat(n)), p); }, {}},
      1, {}, "Franel: 1/(2n) - 1/(8n^2) < H(n) - ln n - gamma < 1/(2n)", ""});

  out.push_back(BoundSpec{
      "klamkin", Target::H,
      {[](std::uint64_t n, Precision p) {
         return add(ball_ln(nball(n, p), p), exact(Rational(1, 2), p), p);
       }, {}},
      {[](std::uint64_t n, Precision p) { return add(ball_ln(nball(n, p), p), one(p), p); }, {1}},
      1, {}, "Klamkin: 1/2 < H(n) - ln n < 1",
      "usually stated as strict on both sides; H(1) - ln 1 = 1 attains the upper bound"});

  out.push_back(BoundSpec{
      "odd", Target::odd_harmonic,
      {[](std::uint64_t n, Precision p) {
         return mul(exact(Rational(1, 2), p), ln_of(2 * nrat(n) + 1, p), p);
       }, {}},
      {[](std::uint64_t n, Precision p) {
         return add(one(p), mul(exact(Rational(1, 2), p), ln_of(2 * nrat(n) - 1, p), p), p);
       }, {1}},
      1, {}, "Klamkin problem 65: ln(2n+1)/2 < sum 1/(2k-1) < 1 + ln(2n-1)/2",
      "usually stated as strict; the upper bound is attained at n = 1"});

  out.push_back(BoundSpec{
      "young", Target::H_minus_ln_gamma,
      {[](std::uint64_t n, Precision p) { return exact(Rational(1) / (2 * nrat(n + 1)), p); }, {}},
      {[](std::uint64_t n, Precision p) { return exact(Rational(1) / (2 * nrat(n)), p); }, {}},
      1, {}, "Young: 1/(2(n+1)) < H(n) - ln n - gamma < 1/(2n)", ""});

  out.push_back(BoundSpec{
      "detemple", Target::H_minus_lnhalf_gamma,
      {[](std::uint64_t n, Precision p) {
         return exact(Rational(1) / (24 * nrat(n + 1) * nrat(n + 1)), p);
       }, {}},
      {[](std::uint64_t n, Precision p) { return exact(Rational(1) / (24 * nrat(n) * nrat(n)), p); },
       {}},
      1, {}, "DeTemple: 1/(24(n+1)^2) < H(n) - ln(n+1/2) - gamma < 1/(24n^2)", ""});

  out.push_back(BoundSpec{
      "toth", Target::H_minus_ln_gamma,
      {[](std::uint64_t n, Precision p) {
         return exact(Rational(1) / (2 * nrat(n) + Rational(2, 5)), p);
       }, {}},
      {[](std::uint64_t n, Precision p) {
         return exact(Rational(1) / (2 * nrat(n) + Rational(1, 3)), p);
       }, {}},
      1, {}, "Toth: 1/(2n + 2/5) < H(n) - ln n - gamma < 1/(2n + 1/3)", ""});

  out.push_back(BoundSpec{
      "toth_sharp", Target::H_minus_ln_gamma,
      {[](std::uint64_t n, Precision p) {
         return ball_inverse(add(exact(2 * nrat(n), p), toth_sharp_constant(p), p));
       }, {1}},
      {[](std::uint64_t n, Precision p) {
         return exact(Rational(1) / (2 * nrat(n) + Rational(1, 3)), p);
       }, {}},
      1,
      {decimal_constant("a", "1/(1-gamma) - 2", "0.36527", "0.36528", toth_sharp_constant),
       rational_constant("b", Rational(1, 3))},
      "Toth (sharp): 1/(2n + 1/(1-gamma) - 2) <= H(n) - ln n - gamma < 1/(2n + 1/3)", ""});

  out.push_back(BoundSpec{
      "alt_tail", Target::alternating_tail,
      {[](std::uint64_t n, Precision p) {
         return ball_inverse(add(exact(2 * nrat(n), p), alt_tail_constant(p), p));
       }, {1}},
      {[](std::uint64_t n, Precision p) { return exact(Rational(1) / (2 * nrat(n) + 1), p); }, {}},
      1,
      {decimal_constant("a", "1/(1-ln 2) - 2", "1.25889", "1.25890", alt_tail_constant),
       rational_constant("b", Rational(1))},
      "Alternating tail: 1/(2n + a) <= |sum_{k>n} (-1)^(k-1)/k| < 1/(2n + b)",
      "a = x_1 is attained, so the lower side is an equality at n = 1"});

  out.push_back(BoundSpec{
      "batir", Target::H,
      {[](std::uint64_t n, Precision p) { return add(batir_constant(p), batir_common(n, p), p); },
       {1}},
      {[](std::uint64_t n, Precision p) { return add(euler_gamma(p), batir_common(n, p), p); }, {}},
      1,
      {decimal_constant("lower", "1 + ln(sqrt(e) - 1)", "0.56724", "0.56725", batir_constant),
       decimal_constant("upper", "gamma", "0.57721", "0.57722", euler_gamma)},
      "Batir: 1 + ln(sqrt(e)-1) - ln(e^(1/(n+1)) - 1) <= H(n) < gamma - ln(e^(1/(n+1)) - 1)", ""});

  out.push_back(BoundSpec{
      "qi_guo_family", Target::H,
      {[](std::uint64_t n, Precision p) {
         return add(ln_of(nrat(n) + Rational(1, 2), p), euler_gamma(p), p);
       }, {}},
      {[](std::uint64_t n, Precision p) {
         const Ball shift = add(nball(n, p), qi_guo_constant(p), p);
         return add(ball_ln(shift, p), euler_gamma(p), p);
       }, {1}},
      1,
      {rational_constant("lower", Rational(1, 2)),
       decimal_constant("upper", "e^(1-gamma) - 1", "0.52620", "0.52621", qi_guo_constant)},
      "Qi-Guo: ln(n + 1/2) + gamma < H(n) <= ln(n + e^(1-gamma) - 1) + gamma", ""});

  out.push_back(BoundSpec{
      "chen", Target::H_minus_lnhalf_gamma,
      {[](std::uint64_t n, Precision p) {
         const Ball shifted = add(nball(n, p), chen_constant(p), p);
         return ball_inverse(mul(Ball::from_int(24, p), ball_sqr(shifted), p));
       }, {1}},
      {[](std::uint64_t n, Precision p) {
         const Rational s = nrat(n) + Rational(1, 2);
         return exact(Rational(1) / (24 * s * s), p);
       }, {}},
      1,
      {decimal_constant("a", "1/(2 sqrt(6[1-gamma-ln(3/2)])) - 1", "0.55106", "0.55107",
                        chen_constant),
       rational_constant("b", Rational(1, 2))},
      "Chen: 1/(24(n+a)^2) <= H(n) - ln(n+1/2) - gamma < 1/(24(n+1/2)^2)",
      "the lower constant is often quoted as 1/(2 sqrt(6[1-gamma-ln(3/2)])) without the -1; with that value "
      "the bound is not attained at n = 1"});

  out.push_back(BoundSpec{
      "main", Target::H_minus_ln_half_n_gamma,
      {[](std::uint64_t n, Precision p) {
         const Ball den = add(exact(12 * nrat(n) * nrat(n), p), main_lower_constant(p), p);
         return -ball_inverse(den);
       }, {1}},
      {[](std::uint64_t n, Precision p) {
         return exact(-Rational(1) / (12 * nrat(n) * nrat(n) + Rational(6, 5)), p);
       }, {}},
      1,
      {decimal_constant("lower", "2(7-12 gamma)/(2 gamma - 1)", "0.95073", "0.95074",
                        main_lower_constant),
       rational_constant("upper", Rational(6, 5))},
      "-1/(12n^2 + 2(7-12 gamma)/(2 gamma-1)) <= H(n) - ln n - 1/(2n) - gamma < -1/(12n^2 + 6/5)",
      ""});

  return out;
}

}  // namespace

std::string_view target_name(Target t) {
  switch (t) {
    case Target::H: return "H";
    case Target::H_minus_ln_gamma: return "H_minus_ln_gamma";
    case Target::H_minus_lnhalf_gamma: return "H_minus_lnhalf_gamma";
    case Target::H_minus_ln_half_n_gamma: return "H_minus_ln_half_n_gamma";
    case Target::odd_harmonic: return "odd_harmonic";
    case Target::alternating_tail: return "alternating_tail";
  }
  return "?";
}

bool BoundSide::equality_declared(std::uint64_t n) const {
  return std::find(equality_at.begin(), equality_at.end(), n) != equality_at.end();
}

const std::vector<BoundSpec>& catalog() {
  static const std::vector<BoundSpec> entries = build_catalog();
  return entries;
}

const BoundSpec& find_bound(std::string_view id) {
  for (const BoundSpec& spec : catalog()) {
    if (spec.id == id) return spec;
  }
  throw UnknownBound(std::string(id));
}

Ball TargetValue::combined(Precision p) const {
  return add(Ball::from_rational(exact_part, p), transcendental_part, p);
}

Ball harmonic_offset(Target target, std::uint64_t n, Precision p) {
  switch (target) {
    case Target::H: return Ball(p);
    case Target::H_minus_ln_gamma: return add(ball_ln(nball(n, p), p), euler_gamma(p), p);
    case Target::H_minus_lnhalf_gamma:
      return add(ln_of(nrat(n) + Rational(1, 2), p), euler_gamma(p), p);
    case Target::H_minus_ln_half_n_gamma: {
      const Ball base = add(ball_ln(nball(n, p), p), euler_gamma(p), p);
      return add(base, exact(Rational(1) / (2 * nrat(n)), p), p);
    }
    case Target::odd_harmonic:
    case Target::alternating_tail: break;
  }
  throw DomainError("target is not a shifted harmonic number");
}

TargetValue target_parts(Target target, std::uint64_t n, Precision p) {
  if (n == 0) throw DomainError("targets are defined for n >= 1");
  TargetValue v{n, Rational(0), Ball(p)};
  switch (target) {
    case Target::H:
    case Target::H_minus_ln_gamma:
    case Target::H_minus_lnhalf_gamma:
    case Target::H_minus_ln_half_n_gamma: {
      v.exact_part = harmonic_exact(n);
      if (target == Target::H_minus_ln_half_n_gamma) {
        v.exact_part -= Rational(1) / (2 * nrat(n));
        v.transcendental_part = -add(ball_ln(nball(n, p), p), euler_gamma(p), p);
      } else if (target != Target::H) {
        v.transcendental_part = -harmonic_offset(target, n, p);
      }
      break;
    }
    case Target::odd_harmonic: v.exact_part = odd_harmonic_exact(n); break;
    case Target::alternating_tail: {
      // |ln 2 - S_n| = (-1)^n (ln 2 - S_n)
      const Rational s = alternating_partial_sum(n);
      const Ball ln2 = ln_of(2, p);
      v.exact_part = n % 2 == 0 ? -s : s;
      v.transcendental_part = n % 2 == 0 ? ln2 : -ln2;
      break;
    }
  }
  return v;
}

Ball target_value(Target target, std::uint64_t n, Precision p, const HarmonicSums* sums) {
  if (n == 0) throw DomainError("targets are defined for n >= 1");
  if (sums == nullptr || sums->precision() != p || n > sums->max_n()) {
    return target_parts(target, n, p.plus(16)).combined(p.plus(16)).with_precision(p);
  }
  switch (target) {
    case Target::H: return sums->harmonic(n);
    case Target::H_minus_ln_gamma:
    case Target::H_minus_lnhalf_gamma:
    case Target::H_minus_ln_half_n_gamma:
      return sub(sums->harmonic(n), harmonic_offset(target, n, p), p);
    case Target::odd_harmonic: return sums->odd_harmonic(n);
    case Target::alternating_tail: return alternating_tail_from(sums->alternating(n), n, p);
  }
  throw DomainError("unknown target");
}

BoundEnclosures evaluate_bound(std::string_view id, std::uint64_t n, Precision p) {
  const BoundSpec& spec = find_bound(id);
  if (n < spec.domain_min) throw DomainError("n below the domain of bound " + spec.id);
  return {spec.lower.expr(n, p), spec.upper.expr(n, p)};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::equality: return "equality";
    case Verdict::fail: return "fail";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

namespace {

// Decides `smaller` < `larger`, or equality where declared.
SideOutcome decide_side(const Ball& smaller, const Ball& larger, bool equality_declared) {
  if (certainly_equal(smaller, larger)) {
    return equality_declared ? SideOutcome::equality : SideOutcome::violated;
  }
  switch (ball_compare(smaller, larger)) {
    case Comparison::certainly_less: return SideOutcome::strict;
    case Comparison::certainly_greater: return SideOutcome::violated;
    case Comparison::overlapping: break;
  }
  if (equality_declared && max_radius(smaller, larger) < kEqualityRadius) {
    return SideOutcome::equality;
  }
  return SideOutcome::undecided;
}

std::string sides_suffix(bool lower, bool upper) {
  if (lower && upper) return "(both)";
  return lower ? "(lower)" : "(upper)";
}

}  // namespace

std::string BoundCheck::label() const {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::equality:
      return "equality" + sides_suffix(lower_outcome == SideOutcome::equality,
                                       upper_outcome == SideOutcome::equality);
    case Verdict::fail:
      return "fail" + sides_suffix(lower_outcome == SideOutcome::violated,
                                   upper_outcome == SideOutcome::violated);
    case Verdict::undecided:
      return "undecided" + sides_suffix(lower_outcome == SideOutcome::undecided,
                                        upper_outcome == SideOutcome::undecided);
  }
  return "?";
}

const Ball& BoundCheck::binding_margin() const {
  return mpfr_cmp(lower_margin.mid(), upper_margin.mid()) <= 0 ? lower_margin : upper_margin;
}

BoundCheck check_bound(std::string_view id, std::uint64_t n, Precision p, const HarmonicSums* sums) {
  const BoundSpec& spec = find_bound(id);
  if (n < spec.domain_min) throw DomainError("n below the domain of bound " + spec.id);

  BoundCheck check;
  check.id = spec.id;
  check.n = n;
  for (Precision cur = p; !cur.above_cap(); cur = cur.doubled()) {
    check.precision_used = cur;
    check.lower = spec.lower.expr(n, cur);
    check.upper = spec.upper.expr(n, cur);
    check.target = target_value(spec.target, n, cur, sums);
    check.lower_outcome = decide_side(check.lower, check.target, spec.lower.equality_declared(n));
    check.upper_outcome = decide_side(check.target, check.upper, spec.upper.equality_declared(n));
    if (check.lower_outcome != SideOutcome::undecided &&
        check.upper_outcome != SideOutcome::undecided) {
      break;
    }
  }
  check.lower_margin = sub(check.target, check.lower, check.precision_used);
  check.upper_margin = sub(check.upper, check.target, check.precision_used);

  auto any = [&](SideOutcome o) { return check.lower_outcome == o || check.upper_outcome == o; };
  if (any(SideOutcome::violated)) {
    check.verdict = Verdict::fail;
  } else if (any(SideOutcome::undecided)) {
    check.verdict = Verdict::undecided;
  } else if (any(SideOutcome::equality)) {
    check.verdict = Verdict::equality;
  } else {
    check.verdict = Verdict::pass;
  }
  return check;
}

}  // namespace harmonic
