#pragma once

#include "harmonic/bigmath/ball.hpp"

namespace harmonic {

// Digamma, trigamma and log-gamma on (0, inf).
//
// Arguments below the asymptotic threshold are shifted upward with the
// recurrences psi(x+1) = psi(x) + 1/x, psi'(x+1) = psi'(x) - 1/x^2 and
// lnGamma(x+1) = lnGamma(x) + ln x. The asymptotic series are then truncated
// once a term drops below the working precision, and that first omitted term
// bounds the truncation error: the Stirling tails F_n and G_n are completely
// monotonic, so each series envelopes its function.
//
// Point balls are evaluated directly. Balls with a radius are handled through
// monotonicity (psi increasing, psi' decreasing, lnGamma decreasing below its
// minimum near 1.4616 and increasing above it).

/// Smallest argument at which the asymptotic series are used at precision p.
long asymptotic_threshold(Precision p);

Ball digamma(const Ball& x, Precision p);
Ball trigamma(const Ball& x, Precision p);
Ball lgamma(const Ball& x, Precision p);

enum class StirlingKind { F, G };

/// F_n(x) = lnGamma(x) - (x - 1/2) ln x + x - ln(2 pi)/2 - sum_{j=1}^{2n} B_2j/(2j(2j-1) x^(2j-1))
/// G_n(x) = -lnGamma(x) + (x - 1/2) ln x - x + ln(2 pi)/2 + sum_{j=1}^{2n+1} ...
/// Both are nonnegative and decreasing on (0, inf). order <= 10.
Ball stirling_tail(StirlingKind kind, unsigned order, const Ball& x, Precision p);

// Closed-form polynomial envelopes valid on (0, inf):
//   ln x - (1260x^5 + 210x^4 - 21x^2 + 10)/(2520x^6) < psi(x)
//   psi(x) < ln x - (2520x^7 + 420x^6 - 42x^4 + 20x^2 - 21)/(5040x^8)
//   (210x^8 + 105x^7 + 35x^6 - 7x^4 + 5x^2 - 7)/(210x^9) < psi'(x)
//   psi'(x) < (210x^6 + 105x^5 + 35x^4 - 7x^2 + 5)/(210x^7)
Ball digamma_lower_envelope(const Ball& x, Precision p);
Ball digamma_upper_envelope(const Ball& x, Precision p);
Ball trigamma_lower_envelope(const Ball& x, Precision p);
Ball trigamma_upper_envelope(const Ball& x, Precision p);

}  // namespace harmonic
