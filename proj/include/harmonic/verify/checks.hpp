#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/bigmath/ball.hpp"
#include "harmonic/bigmath/rational.hpp"
#include "harmonic/bounds/catalog.hpp"
#include "harmonic/specfun/gamma_family.hpp"
#include "harmonic/specfun/harmonic_numbers.hpp"
#include "harmonic/verify/report.hpp"

namespace harmonic {

/// f(x) = 1/(ln x + 1/(2x) - psi(x+1)) - 12x^2.
///
/// The integer form uses psi(n+1) = H(n) - gamma with H(n) exact. Both forms
/// raise the working precision until the denominator is certainly positive
/// and throw EnclosureError when the cap is reached first. Requires x >= 1.
Ball f_eval(std::uint64_t n, Precision p);
Ball f_eval(const Ball& x, Precision p);

/// g(x) = psi'(x+1) - 1/x + 1/(2x^2) - 24x [psi(x+1) - ln x - 1/(2x)]^2,
/// the numerator of f'(x) up to the positive factor 4x^2 / denominator^2.
Ball g_eval(const Ball& x, Precision p);

/// The rational lower bound (1659x^4 - 8400x^2 - 100) / (264600 x^11) on g.
Ball g_polynomial_bound(const Ball& x, Precision p);

/// eps_n = 120 n^4 (H(n) - ln n - gamma - 1/(2n) + 1/(12n^2)).
Ball epsilon_n(std::uint64_t n, Precision p);

/// x_n = 1/|sum_{k>n} (-1)^(k-1)/k| - 2n.
Ball alt_tail_x(std::uint64_t n, Precision p);

/// Monotonicity of f, f(n) < 6/5, the values f(1), f(2), f(3) and their
/// closed forms, the shrinking gap to 6/5, and thresholds at n = 1000, 10^4.
/// Requires max_n >= 3.
VerificationReport sharpness_main(std::uint64_t max_n, Precision p);

/// Positivity of g at each grid point (all >= 3), directly and through the
/// polynomial bound, plus the exact shifted-polynomial argument.
VerificationReport g_positivity(const std::vector<Rational>& grid, Precision p);

/// 0 < eps_n < 1 for n in [1, max_n].
VerificationReport epsilon_window(std::uint64_t max_n, Precision p);

/// Bounds whose H(n) interval must contain the one implied by "main".
inline const std::vector<std::string>& refinement_targets() {
  static const std::vector<std::string> ids{"chen", "toth_sharp", "detemple", "franel", "young"};
  return ids;
}

/// H(n) interval implied by a catalog bound: [lower + offset, upper + offset].
BoundEnclosures implied_harmonic_interval(std::string_view id, std::uint64_t n, Precision p);

/// For n in [2, max_n], the main-implied H(n) interval lies strictly inside
/// each interval implied by refinement_targets().
VerificationReport refinement_check(std::uint64_t max_n, Precision p);

/// x_1 = 1/(1 - ln 2) - 2, x_n strictly decreasing on [1, max_n], x_n > 1 at
/// sampled n, and x_{10^4} in (1, 1.001). Requires max_n >= 2.
VerificationReport alt_tail_constants(std::uint64_t max_n, Precision p);

/// Equally spaced sample points start, start + step, ...
struct Grid {
  Rational start;
  Rational step;
  unsigned count = 0;
};

/// (-1)^j Delta^j of the sampled Stirling tail is positive for 0 <= j <= depth.
/// One record per j. Requires count >= 8, start > 0, step > 0, depth <= 6.
VerificationReport cm_spotcheck(StirlingKind kind, unsigned order, const Grid& grid,
                                unsigned depth, Precision p);

/// Exact rational-function identities behind the equality cases and the
/// algebra of the monotonicity argument.
VerificationReport equality_algebra();

}  // namespace harmonic
