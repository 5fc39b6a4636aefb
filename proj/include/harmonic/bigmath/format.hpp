#pragma once

#include <string>

#include "harmonic/bigmath/ball.hpp"

namespace harmonic {

/// Decimal rendering of a ball. The printed radius is rounded up and absorbs
/// the error of printing the midpoint in decimal, so "mid +/- rad" read back
/// as exact decimals still encloses the ball.
struct DecimalBall {
  std::string mid;
  std::string rad;
};

DecimalBall to_decimal(const Ball& b);

/// "mid +/- rad"
std::string format_ball(const Ball& b);

}  // namespace harmonic
