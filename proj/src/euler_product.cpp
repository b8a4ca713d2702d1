#include "cuspdim/euler_product.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cuspdim {

namespace {

constexpr mpfr_prec_t kBits = 128;

// Monotone enclosure [lo, hi] of a positive real, every operation rounded
// outward.  The invariant 0 < lo <= hi is kept by construction.
class Interval {
 public:
  Interval() {
    mpfr_init2(lo_, kBits);
    mpfr_init2(hi_, kBits);
    mpfr_set_ui(lo_, 1, MPFR_RNDD);
    mpfr_set_ui(hi_, 1, MPFR_RNDU);
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;

  // *this *= [qlo, qhi] with 0 < qlo <= qhi.
  void mul(const Rational& qlo, const Rational& qhi) {
    if (qlo.sign() <= 0) throw std::domain_error("interval: nonpositive factor");
    mpfr_mul_q(lo_, lo_, qlo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(hi_, hi_, qhi.raw().get_mpq_t(), MPFR_RNDU);
  }

  // Widen multiplicatively by exp(±eps): lo *= exp(-eps), hi *= exp(eps).
  void widen_exp(const mpfr_t eps) {
    mpfr_t t;
    mpfr_init2(t, kBits);
    mpfr_neg(t, eps, MPFR_RNDU);
    mpfr_exp(t, t, MPFR_RNDD);  // exp(-eps) rounded down
    mpfr_mul(lo_, lo_, t, MPFR_RNDD);
    mpfr_set(t, eps, MPFR_RNDU);
    mpfr_exp(t, t, MPFR_RNDU);  // exp(eps) rounded up
    mpfr_mul(hi_, hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  }

  CertifiedValue finish() const {
    mpfr_t mid, rad;
    mpfr_init2(mid, kBits);
    mpfr_init2(rad, kBits);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(rad, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(rad, rad, 1, MPFR_RNDU);
    CertifiedValue out;
    out.value = mpfr_get_d(mid, MPFR_RNDN);
    // Inflate for the mid/value double roundings.
    out.radius = mpfr_get_d(rad, MPFR_RNDU) + std::abs(out.value) * 1e-15 + 1e-300;
    mpfr_clear(mid);
    mpfr_clear(rad);
    return out;
  }

 private:
  mpfr_t lo_, hi_;
};

// Upper bound for sum_{p > P} 1 / p^2: every prime beyond 3 is 1 or 5 mod 6,
// so the sum is at most sum over n > P of the 6-periodic indicator, which
// integrates to 1/(3(P+1)); the first two candidate terms are kept whole.
void prime_tail_bound(mpfr_t out, std::uint64_t P) {
  mpfr_t t;
  mpfr_init2(t, kBits);
  mpfr_set_ui(out, 1, MPFR_RNDU);
  mpfr_div_ui(out, out, 3 * (P + 1), MPFR_RNDU);
  mpfr_set_ui(t, 2, MPFR_RNDU);
  mpfr_div_ui(t, t, P + 1, MPFR_RNDU);
  mpfr_div_ui(t, t, P + 1, MPFR_RNDU);
  mpfr_add(out, out, t, MPFR_RNDU);
  mpfr_clear(t);
}

// Exact sufficient conditions for |log q| <= x with x = c2/p^2:
//   q * (1 + x) >= 1  implies  q >= 1/(1+x) >= exp(-x), and
//   q <= 1 + x        implies  q <= exp(x),
// using 1 + x <= exp(x) on both sides.
bool local_tail_claim_holds(const Rational& q, std::uint64_t p, const Rational& c2) {
  if (q.sign() <= 0) return false;
  Rational x = c2 / Rational(BigInt(p) * BigInt(p));
  Rational one_plus(Rational(1) + x);
  return q * one_plus >= Rational(1) && q <= one_plus;
}

}  // namespace

std::string CertifiedValue::digits(int max_digits) const {
  int certified = 0;
  double scale = 0.4;
  for (int d = 1; d <= max_digits; ++d) {
    scale /= 10.0;
    if (radius < scale)
      certified = d;
    else
      break;
  }
  if (certified == 0) return "(uncertified)";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", certified, value);
  return buf;
}

namespace {

// Shared core: local(p) returns an exact enclosure [lo, hi] of the factor.
CertifiedValue euler_product_core(
    const std::function<std::pair<Rational, Rational>(std::uint64_t)>& local,
    std::uint64_t prime_cutoff, const Rational& tail_c2) {
  if (prime_cutoff < 100) throw std::domain_error("euler product: cutoff too small to certify");
  if (prime_cutoff > 2'000'000'000)
    throw std::domain_error("euler product: cutoff beyond the sieve range");
  if (tail_c2.sign() <= 0) throw std::domain_error("euler product: tail constant must be positive");

  const SpfSieve& sieve = SpfSieve::shared(static_cast<std::uint32_t>(prime_cutoff));
  Interval prod;
  const std::uint64_t window_lo = prime_cutoff / 2;
  for (std::uint64_t p : sieve.primes()) {
    if (p > prime_cutoff) break;
    auto [qlo, qhi] = local(p);
    if (qlo.sign() <= 0 || qhi < qlo)
      throw std::domain_error("euler product: bad local factor at p=" + std::to_string(p));
    if (p > window_lo &&
        !(local_tail_claim_holds(qlo, p, tail_c2) && local_tail_claim_holds(qhi, p, tail_c2)))
      throw std::domain_error("euler product: tail claim fails at p=" + std::to_string(p));
    prod.mul(qlo, qhi);
  }

  // Tail: |sum_{p > P} log local(p)| <= c2 * sum_{p > P} 1/p^2.
  mpfr_t eps, c2f;
  mpfr_init2(eps, kBits);
  mpfr_init2(c2f, kBits);
  prime_tail_bound(eps, prime_cutoff);
  mpfr_set_q(c2f, tail_c2.raw().get_mpq_t(), MPFR_RNDU);
  mpfr_mul(eps, eps, c2f, MPFR_RNDU);
  prod.widen_exp(eps);
  mpfr_clear(eps);
  mpfr_clear(c2f);
  return prod.finish();
}

}  // namespace

CertifiedValue certified_euler_product(const std::function<Rational(std::uint64_t)>& local,
                                       std::uint64_t prime_cutoff, const Rational& tail_c2) {
  return euler_product_core(
      [&](std::uint64_t p) {
        Rational q = local(p);
        return std::pair{q, q};
      },
      prime_cutoff, tail_c2);
}

CertifiedValue euler_product_constant(const MultiplicativeFunction& h, std::uint64_t prime_cutoff,
                                      const EulerProductOptions& opts) {
  if (opts.series_ratio.sign() <= 0 || opts.series_ratio >= Rational(1))
    throw std::domain_error("euler product: series ratio must lie in (0, 1)");

  auto local = [&](std::uint64_t p) -> std::pair<Rational, Rational> {
    // (1 - 1/p) * sum_{a >= 0} h(p^a)/p^a, truncated once p^{a+1} > 2^series_bits,
    // the discarded terms enclosed by a geometric bound at series_ratio.
    Rational sum(1);  // a = 0 term: h(1) = 1
    Rational pw(1);
    Rational last_abs(0);
    unsigned a = 0;
    double log2p = std::log2(static_cast<double>(p));
    while (static_cast<double>(a + 1) * log2p <= static_cast<double>(opts.series_bits)) {
      ++a;
      pw = pw / Rational(BigInt(p));
      Rational term = h.at_prime_power(p, a) * pw;
      sum += term;
      Rational t = term.abs();
      // Verified-window claim: past the leading terms the terms decay at
      // ratio <= series_ratio; violations reject the certification.
      if (a >= 8 && !last_abs.is_zero() && t > last_abs * opts.series_ratio)
        throw std::domain_error("euler product: series terms decay too slowly at p=" +
                                std::to_string(p));
      if (a >= 8 && last_abs.is_zero() && !t.is_zero())
        throw std::domain_error("euler product: series terms revive at p=" + std::to_string(p));
      last_abs = t;
    }
    // |sum of discarded terms| <= last * r/(1-r) under the verified claim.
    Rational tail = last_abs * opts.series_ratio / (Rational(1) - opts.series_ratio);
    Rational head = Rational(1) - Rational(1, static_cast<std::int64_t>(p));
    return std::pair{head * (sum - tail), head * (sum + tail)};
  };
  return euler_product_core(local, prime_cutoff, opts.tail_c2);
}

// ---------------------------------------------------------------------------
// Closed-form local factors
// ---------------------------------------------------------------------------

Rational a0_plus_local(std::uint64_t p) {
  BigInt P(p);
  return Rational(1) - Rational(BigInt(1), P * P - P);
}

Rational a1_star_local(std::uint64_t p) {
  BigInt P(p);
  return Rational(1) - Rational(BigInt(2), P * P);
}

Rational a1_plus_local(std::uint64_t p) {
  BigInt P(p);
  return Rational(1) - Rational(BigInt(3), P * P);
}

Rational b0_local(std::uint64_t p) {
  BigInt P(p);
  Rational inv(BigInt(1), P);
  Rational head = (Rational(1) - inv) / (Rational(1) + inv);
  Rational poly = Rational(1) + Rational(2) * inv - inv.pow(4) - inv.pow(5);
  return head * poly;
}

Rational b1_local(std::uint64_t p) {
  BigInt P(p);
  Rational inv(BigInt(1), P);
  Rational poly = Rational(1) + inv - Rational(2) * inv.pow(3) - Rational(2) * inv.pow(4) -
                  Rational(2) * inv.pow(5) + inv.pow(6) + inv.pow(7) + inv.pow(8);
  return poly / (Rational(1) + inv);
}

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

namespace {

CertifiedValue mpfr_unary(int (*op)(mpfr_t, mpfr_rnd_t)) {
  mpfr_t lo, hi;
  mpfr_init2(lo, kBits);
  mpfr_init2(hi, kBits);
  op(lo, MPFR_RNDD);
  op(hi, MPFR_RNDU);
  CertifiedValue out;
  double a = mpfr_get_d(lo, MPFR_RNDD);
  double b = mpfr_get_d(hi, MPFR_RNDU);
  out.value = a + (b - a) / 2;
  out.radius = (b - a) + std::abs(out.value) * 1e-15 + 1e-300;
  mpfr_clear(lo);
  mpfr_clear(hi);
  return out;
}

CertifiedValue zeta_value(unsigned s) {
  mpfr_t lo, hi;
  mpfr_init2(lo, kBits);
  mpfr_init2(hi, kBits);
  mpfr_set_ui(lo, s, MPFR_RNDD);
  mpfr_zeta(lo, lo, MPFR_RNDD);
  mpfr_set_ui(hi, s, MPFR_RNDU);
  mpfr_zeta(hi, hi, MPFR_RNDU);
  CertifiedValue out;
  double a = mpfr_get_d(lo, MPFR_RNDD);
  double b = mpfr_get_d(hi, MPFR_RNDU);
  out.value = a + (b - a) / 2;
  out.radius = (b - a) + std::abs(out.value) * 1e-15 + 1e-300;
  mpfr_clear(lo);
  mpfr_clear(hi);
  return out;
}

}  // namespace

Constants Constants::compute(std::uint64_t prime_cutoff) {
  Constants c;
  c.prime_cutoff = prime_cutoff;
  c.a0_plus = certified_euler_product(a0_plus_local, prime_cutoff, Rational(4));
  c.a1_star = certified_euler_product(a1_star_local, prime_cutoff, Rational(4));
  c.a1_plus = certified_euler_product(a1_plus_local, prime_cutoff, Rational(4));
  c.b0 = certified_euler_product(b0_local, prime_cutoff, Rational(4));
  c.b1 = certified_euler_product(b1_local, prime_cutoff, Rational(4));
  c.euler_gamma = mpfr_unary(+[](mpfr_t x, mpfr_rnd_t r) { return mpfr_const_euler(x, r); });
  c.pi = mpfr_unary(+[](mpfr_t x, mpfr_rnd_t r) { return mpfr_const_pi(x, r); });
  c.zeta2 = zeta_value(2);
  c.zeta3 = zeta_value(3);
  c.zeta4 = zeta_value(4);
  return c;
}

}  // namespace cuspdim
