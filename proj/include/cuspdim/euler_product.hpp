#pragma once

// Certified numerical constants: Euler products over primes with rigorous
// enclosures (directed rounding plus an explicit prime-tail radius), and the
// classical constants entering the average-order results.

#include <cstdint>
#include <functional>
#include <string>

#include "cuspdim/multiplicative.hpp"
#include "cuspdim/rational.hpp"

namespace cuspdim {

// Decimal value with a rigorous error radius: |true - value| <= radius.
struct CertifiedValue {
  double value = 0;
  double radius = 0;

  // Decimal digits that are certified, capped at max_digits; the count is
  // the largest d with radius < 0.4 * 10^-d.
  std::string digits(int max_digits = 12) const;
};

// prod_{p <= prime_cutoff} local(p), all factors positive, with enclosure.
// tail_c2 is the claimed bound |log local(p)| <= tail_c2 / p^2 for primes
// past the cutoff; it is verified exactly on every prime in
// (cutoff/2, cutoff], and a violation there is a domain error (the product
// decays too slowly to certify).
CertifiedValue certified_euler_product(const std::function<Rational(std::uint64_t)>& local,
                                       std::uint64_t prime_cutoff, const Rational& tail_c2);

struct EulerProductOptions {
  Rational tail_c2 = Rational(4);   // prime-tail claim, as above
  unsigned series_bits = 52;        // per-prime series truncated once p^a > 2^series_bits
  Rational series_ratio = {4, 5};   // claimed |t_{a+1}/t_a| bound past the truncation,
                                    // verified on the trailing computed window
};

// The mean-value constant of a multiplicative h with bounded prime-power
// values: c(h) = prod_p (1 - 1/p) sum_{a >= 0} h(p^a) / p^a.  Series terms
// are exact rationals; the truncation uses the verified-window geometric
// claim above.  Divergent or slowly-decaying local series fail the window
// checks and raise domain errors.
CertifiedValue euler_product_constant(const MultiplicativeFunction& h, std::uint64_t prime_cutoff,
                                      const EulerProductOptions& opts = {});

struct Constants {
  // Euler products attached to the dimension rules:
  //   a0_plus = prod (1 - 1/(p^2 - p))   infimum of N s0+(N) / phi(N)
  //   a1_star = prod (1 - 2/p^2)         leading constant of s1*
  //   a1_plus = prod (1 - 3/p^2)         leading constant of s1+
  //   b0, b1                             mean values of the newform proportions
  CertifiedValue a0_plus, a1_star, a1_plus, b0, b1;
  // Classical constants (tiny radii, directed rounding only).
  CertifiedValue euler_gamma, zeta2, zeta3, zeta4, pi;

  std::uint64_t prime_cutoff = 0;

  static Constants compute(std::uint64_t prime_cutoff = 10'000'000);
};

// Exact closed-form local factors behind Constants (exposed for the
// cross-checks against the series path and the displayed products).
Rational a0_plus_local(std::uint64_t p);
Rational a1_star_local(std::uint64_t p);
Rational a1_plus_local(std::uint64_t p);
Rational b0_local(std::uint64_t p);  // (1-1/p)(1+1/p)^{-1}(1+2/p-1/p^4-1/p^5)
Rational b1_local(std::uint64_t p);  // (1+1/p)^{-1}(1+1/p-2/p^3-2/p^4-2/p^5+1/p^6+1/p^7+1/p^8)

}  // namespace cuspdim
