#include "cuspdim/weights.hpp"

#include <stdexcept>

namespace cuspdim {

namespace {

// Floor division for possibly negative numerators.
std::int64_t fdiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

WeightCoefficients weight_coeffs(int k) {
  if (k < 2) throw std::domain_error("weight_coeffs: weight must be >= 2");
  WeightCoefficients w;
  w.k = k;
  // c2 = 1/4 + floor(k/4) - k/4, c3 = 1/3 + floor(k/3) - k/3.
  w.c2 = Rational(1 - k % 4, 4);
  w.c3 = Rational(1 - k % 3, 3);
  bool even = k % 2 == 0;
  w.b1 = even ? Rational(k - 7, 24) + w.c2 + w.c3 : Rational(7 - k, 24);
  w.b2 = Rational(even ? fdiv(k - 4, 4) : -fdiv(k - 4, 4), 2) + w.c2 / Rational(2);
  w.b3 = w.c3;
  w.b4 = even ? Rational(-1, 4) : Rational(1, 4);  // -c2(2k)
  return w;
}

ScaledWeights scaled_weights(int k) {
  WeightCoefficients w = weight_coeffs(k);
  ScaledWeights s;
  s.k = k;
  s.delta_k = k == 2;
  s.c2_x12 = (Rational(12) * w.c2).as_integer().get_si();
  s.c3_x12 = (Rational(12) * w.c3).as_integer().get_si();
  const Rational* b[5] = {nullptr, &w.b1, &w.b2, &w.b3, &w.b4};
  for (int i = 1; i <= 4; ++i) s.b_x24[i] = (Rational(24) * *b[i]).as_integer().get_si();
  return s;
}

}  // namespace cuspdim
