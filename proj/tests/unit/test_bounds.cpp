#include <doctest.h>

#include <random>
#include <set>

#include "harmonic/bounds/catalog.hpp"
#include "harmonic/error.hpp"
#include "harmonic/specfun/euler_maclaurin.hpp"
#include "oracles.hpp"

using namespace harmonic;

TEST_CASE("catalog ids and order") {
  const std::vector<std::string> expected{"franel", "klamkin",       "odd",   "young",
                                          "detemple", "toth",        "toth_sharp", "alt_tail",
                                          "batir",  "qi_guo_family", "chen",  "main"};
  REQUIRE(catalog().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(catalog()[i].id == expected[i]);
  CHECK_THROWS_AS(find_bound("nope"), UnknownBound);
  CHECK(find_bound("main").target == Target::H_minus_ln_half_n_gamma);
}

TEST_CASE("declared equality indices") {
  std::set<std::pair<std::string, std::string>> declared;
  for (const BoundSpec& spec : catalog()) {
    if (spec.lower.equality_declared(1)) declared.insert({spec.id, "lower"});
    if (spec.upper.equality_declared(1)) declared.insert({spec.id, "upper"});
    CHECK_FALSE(spec.lower.equality_declared(2));
    CHECK_FALSE(spec.upper.equality_declared(2));
  }
  const std::set<std::pair<std::string, std::string>> expected{
      {"main", "lower"},          {"toth_sharp", "lower"}, {"batir", "lower"},
      {"chen", "lower"},          {"qi_guo_family", "upper"}, {"klamkin", "upper"},
      {"odd", "upper"},           {"alt_tail", "lower"}};
  CHECK(declared == expected);
}

TEST_CASE("sharp constants sit inside their decimal brackets") {
  const Precision p(128);
  for (const BoundSpec& spec : catalog()) {
    for (const SharpConstant& c : spec.sharp_constants) {
      const Ball v = c.evaluate(p);
      CAPTURE(spec.id);
      CAPTURE(c.name);
      CHECK(ball_compare(Ball::from_rational(c.decimal_lo, p), v) != Comparison::certainly_greater);
      CHECK(ball_compare(v, Ball::from_rational(c.decimal_hi, p)) != Comparison::certainly_greater);
      CHECK(v.rad_double() < 1e-30);
    }
  }
}

TEST_CASE("toth endpoints at n = 1 are 5/12 and 3/7") {
  const BoundEnclosures e = evaluate_bound("toth", 1, Precision(128));
  CHECK(e.lower.contains(Rational(5, 12)));
  CHECK(e.upper.contains(Rational(3, 7)));
  const BoundCheck c = check_bound("toth", 1, Precision(128));
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.label() == "pass");
}

TEST_CASE("main at n = 1 attains its lower bound") {
  const BoundCheck c = check_bound("main", 1, Precision(128));
  CHECK(c.verdict == Verdict::equality);
  CHECK(c.label() == "equality(lower)");
  CHECK(c.lower_outcome == SideOutcome::equality);
  CHECK(c.upper_outcome == SideOutcome::strict);
  CHECK(c.lower.overlaps(c.target));
  CHECK(max_radius(c.lower, c.target) < kEqualityRadius);
  // Target value at n = 1 is 1/2 - gamma.
  CHECK(oracle::consistent(c.target, oracle::decimal("-0.0772156649015328606065")));
}

TEST_CASE("targets") {
  const Precision p(128);
  CHECK(target_value(Target::H, 10, p).contains(Rational(7381, 2520)));
  CHECK(oracle::consistent(target_value(Target::H_minus_ln_half_n_gamma, 2, p),
                           oracle::decimal("-0.0203628454614781700237")));
  CHECK(target_value(Target::odd_harmonic, 3, p).contains(Rational(23, 15)));
  // The cached sums give the same enclosure as direct evaluation.
  const HarmonicSums sums(50, p);
  for (Target t : {Target::H, Target::H_minus_ln_gamma, Target::H_minus_lnhalf_gamma,
                   Target::H_minus_ln_half_n_gamma, Target::odd_harmonic,
                   Target::alternating_tail}) {
    CHECK(target_value(t, 37, p, &sums).overlaps(target_value(t, 37, p)));
  }
  CHECK_THROWS_AS(target_value(Target::H, 0, p), DomainError);
  CHECK_THROWS_AS(harmonic_offset(Target::odd_harmonic, 3, p), DomainError);
}

TEST_CASE("every bound holds on random indices") {
  // Property: for random n the check is pass (or a declared equality).
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> index(2, 20000);
  const Precision p(128);
  for (int i = 0; i < 30; ++i) {
    const std::uint64_t n = index(rng);
    for (const BoundSpec& spec : catalog()) {
      const BoundCheck c = check_bound(spec.id, n, p);
      CAPTURE(spec.id);
      CAPTURE(n);
      CHECK(c.verdict == Verdict::pass);
      CHECK(c.lower_margin.is_positive());
      CHECK(c.upper_margin.is_positive());
    }
  }
}

TEST_CASE("precision retry is reported") {
  const BoundCheck c = check_bound("main", 5000, Precision(53));
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.precision_used.bits() >= 53);
}

TEST_CASE("margins are target minus lower and upper minus target") {
  const BoundCheck c = check_bound("franel", 3, Precision(128));
  CHECK(c.lower_margin.is_positive());
  const Ball swapped = sub(c.lower, c.target, Precision(128));
  CHECK(swapped.is_negative());
}
