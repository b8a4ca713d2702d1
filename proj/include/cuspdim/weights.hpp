#pragma once

// Weight-dependent coefficients of the dimension formulas.

#include <cstdint>

#include "cuspdim/rational.hpp"

namespace cuspdim {

// c2 has period 4 in k and |c2| <= 1/2; c3 has period 3 and |c3| <= 1/2.
// b1..b4 are the order-four correction coefficients entering only at
// levels with a divisor <= 4.
struct WeightCoefficients {
  int k = 0;
  Rational c2, c3;
  Rational b1, b2, b3, b4;
};

WeightCoefficients weight_coeffs(int k);  // k >= 2; smaller k is a domain error

// Denominator-cleared view used by the integer scan path: 12*c2, 12*c3 and
// 24*b1..24*b4 are integral for every k.
struct ScaledWeights {
  int k = 0;
  std::int64_t c2_x12 = 0;
  std::int64_t c3_x12 = 0;
  std::int64_t b_x24[5] = {0, 0, 0, 0, 0};  // index 1..4
  bool delta_k = false;                     // k == 2 (the delta(k/2) term)
};

ScaledWeights scaled_weights(int k);

}  // namespace cuspdim
