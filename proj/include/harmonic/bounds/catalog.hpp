#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/bigmath/ball.hpp"
#include "harmonic/specfun/harmonic_numbers.hpp"

namespace harmonic {

/// The quantity a bound encloses.
enum class Target {
  H,                        // H(n)
  H_minus_ln_gamma,         // H(n) - ln n - gamma
  H_minus_lnhalf_gamma,     // H(n) - ln(n + 1/2) - gamma
  H_minus_ln_half_n_gamma,  // H(n) - ln n - 1/(2n) - gamma
  odd_harmonic,             // sum_{k<=n} 1/(2k-1)
  alternating_tail,         // |sum_{k>n} (-1)^(k-1)/k|
};

std::string_view target_name(Target t);

using BoundExpr = std::function<Ball(std::uint64_t n, Precision p)>;

/// One side of a two-sided inequality. The side is strict except at the
/// indices listed in `equality_at`, where the bound is attained.
struct BoundSide {
  BoundExpr expr;
  std::vector<std::uint64_t> equality_at;

  bool equality_declared(std::uint64_t n) const;
};

struct SharpConstant {
  std::string name;
  std::string expression;
  // Decimal bracket [decimal_lo, decimal_hi] of the exact value.
  Rational decimal_lo;
  Rational decimal_hi;
  std::function<Ball(Precision)> evaluate;
};

struct BoundSpec {
  std::string id;
  Target target;
  BoundSide lower;
  BoundSide upper;
  std::uint64_t domain_min = 1;
  std::vector<SharpConstant> sharp_constants;
  std::string reference;
  std::string note;  // known discrepancies with the published statement
};

/// All twelve bounds, in a fixed order.
const std::vector<BoundSpec>& catalog();

/// Throws UnknownBound.
const BoundSpec& find_bound(std::string_view id);

/// A target split into its exact rational part and its transcendental part.
struct TargetValue {
  std::uint64_t n = 0;
  Rational exact_part;
  Ball transcendental_part;

  Ball combined(Precision p) const;
};

TargetValue target_parts(Target target, std::uint64_t n, Precision p);

/// Enclosure of the target at n. When `sums` covers n at precision p, its
/// cached partial sums replace the exact summation.
Ball target_value(Target target, std::uint64_t n, Precision p,
                  const HarmonicSums* sums = nullptr);

/// Amount added to the target to recover H(n): ln n + gamma, etc. Zero for H.
/// Throws DomainError for targets that are not shifted harmonic numbers.
Ball harmonic_offset(Target target, std::uint64_t n, Precision p);

struct BoundEnclosures {
  Ball lower;
  Ball upper;
};

/// Throws UnknownBound, or DomainError when n < domain_min.
BoundEnclosures evaluate_bound(std::string_view id, std::uint64_t n, Precision p);

enum class Verdict { pass, equality, fail, undecided };

std::string_view verdict_name(Verdict v);

enum class SideOutcome { strict, equality, violated, undecided };

struct BoundCheck {
  std::string id;
  std::uint64_t n = 0;
  Verdict verdict = Verdict::undecided;
  SideOutcome lower_outcome = SideOutcome::undecided;
  SideOutcome upper_outcome = SideOutcome::undecided;
  Ball lower;
  Ball target;
  Ball upper;
  Ball lower_margin;  // target - lower
  Ball upper_margin;  // upper - target
  Precision precision_used;

  /// "pass", "equality(lower)", "equality(upper)", "fail(upper)", ...
  std::string label() const;
  /// The tighter of the two margins.
  const Ball& binding_margin() const;
};

/// Radius below which persistent overlap at a declared equality index is
/// reported as equality.
inline constexpr double kEqualityRadius = 1e-30;

/// Decides lower < target < upper, doubling the precision from p up to the
/// cap while a side is undecided. Declared equality indices report equality
/// once the enclosures overlap with radius below kEqualityRadius.
BoundCheck check_bound(std::string_view id, std::uint64_t n, Precision p,
                       const HarmonicSums* sums = nullptr);

}  // namespace harmonic
