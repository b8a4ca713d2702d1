#include "cuspdim/analysis.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

#include "cuspdim/parallel.hpp"

namespace cuspdim {

namespace {

constexpr mpfr_prec_t kPrec = 96;
constexpr std::uint64_t kBlock = 4096;

// Constants backing the curves and predictions; one computation per process.
const Constants& analysis_constants() {
  static const Constants c = Constants::compute(1'000'000);
  return c;
}

// Exact rational edges of a certified enclosure.  CertifiedValue radii are
// already inflated past the double roundings, so the dyadic edges enclose
// the true value.
Rational certified_lower(const CertifiedValue& v) {
  return Rational::from_double(v.value - v.radius);
}
Rational certified_upper(const CertifiedValue& v) {
  return Rational::from_double(v.value + v.radius);
}

// ---------------------------------------------------------------------------
// Lower-bound curves
// ---------------------------------------------------------------------------
//
// Weight-2 lower bounds, every operation rounded toward the sound side:
//
//   g0plus, nonsquare N:  a_lo ln2 N / (12 ln 2N) - (7/12) 16 (N/16)^t - 1
//   g0plus, square N=M^2: a_lo ln2 M^2 / (12 ln 2M) - M/2 - (7/12) 16 (M/16)^t - 1
//   g0, all N:            (N - 6 sqrt N) / 12 - (7/12) 16 (N/16)^t
//
// with t = ln2/ln11, from phi(N) >= N ln2 / ln 2N, 2^omega <= 16 (N/16)^t,
// the vanishing of the plus cusp count off squares, and the cusp/elliptic
// count bounds.  Each curve increases past its turning point.

enum class Curve { g0plus_nonsquare, g0plus_square, g0_all };

constexpr std::uint64_t kTurningNonsquare = 9'000;
constexpr std::uint64_t kTurningSquare = 170;  // in M
constexpr std::uint64_t kTurningG0 = 1'000;
constexpr std::uint64_t kCurveArgMax = 1'000'000'000'000'000'000ull;

double curve_lower(Curve curve, std::uint64_t n, const Rational& a_lo) {
  if (n < 17 || n > kCurveArgMax) throw std::domain_error("curve: argument out of range");
  mpfr_t t1, t2, den, x;
  mpfr_inits2(kPrec, t1, t2, den, x, (mpfr_ptr) nullptr);

  // Subtracted prime-count term, rounded up: (7/12) 16 (n/16)^t.
  mpfr_set_ui(x, 11, MPFR_RNDD);
  mpfr_log(x, x, MPFR_RNDD);
  mpfr_const_log2(t2, MPFR_RNDU);
  mpfr_div(t2, t2, x, MPFR_RNDU);  // t rounded up (n/16 > 1, so up is outward)
  mpfr_set_ui(x, n, MPFR_RNDU);
  mpfr_div_ui(x, x, 16, MPFR_RNDU);  // exact: power-of-two divisor
  mpfr_log(x, x, MPFR_RNDU);
  mpfr_mul(t2, t2, x, MPFR_RNDU);
  mpfr_exp(t2, t2, MPFR_RNDU);
  mpfr_mul_ui(t2, t2, 112, MPFR_RNDU);  // 16 * 7
  mpfr_div_ui(t2, t2, 12, MPFR_RNDU);

  if (curve == Curve::g0_all) {
    // (n - 6 sqrt n) / 12, rounded down.
    mpfr_set_ui(x, n, MPFR_RNDU);
    mpfr_sqrt(x, x, MPFR_RNDU);
    mpfr_mul_ui(x, x, 6, MPFR_RNDU);
    mpfr_ui_sub(t1, n, x, MPFR_RNDD);
    mpfr_div_ui(t1, t1, 12, MPFR_RNDD);
  } else {
    // a_lo ln2 L / (12 ln 2n), rounded down; L = n or n^2.
    mpfr_set_q(t1, a_lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_const_log2(x, MPFR_RNDD);
    mpfr_mul(t1, t1, x, MPFR_RNDD);
    mpfr_mul_ui(t1, t1, n, MPFR_RNDD);
    if (curve == Curve::g0plus_square) mpfr_mul_ui(t1, t1, n, MPFR_RNDD);
    mpfr_set_ui(den, n, MPFR_RNDU);
    mpfr_mul_ui(den, den, 2, MPFR_RNDU);
    mpfr_log(den, den, MPFR_RNDU);
    mpfr_mul_ui(den, den, 12, MPFR_RNDU);
    mpfr_div(t1, t1, den, MPFR_RNDD);
    if (curve == Curve::g0plus_square) {
      mpfr_set_ui(x, n, MPFR_RNDU);
      mpfr_div_ui(x, x, 2, MPFR_RNDU);  // exact
      mpfr_sub(t1, t1, x, MPFR_RNDD);
    }
    mpfr_sub_ui(t1, t1, 1, MPFR_RNDD);
  }

  mpfr_sub(t1, t1, t2, MPFR_RNDD);
  double out = mpfr_get_d(t1, MPFR_RNDD);
  mpfr_clears(t1, t2, den, x, (mpfr_ptr) nullptr);
  return out;
}

// Monotonicity guard: walk a multiplicative grid from `turning` to `top`
// checking the curve never decreases, then doubling points until the
// argument cap.  Returns the grid actually walked.
std::vector<std::uint64_t> walk_monotone(Curve curve, std::uint64_t turning, std::uint64_t top,
                                         const Rational& a_lo) {
  std::vector<std::uint64_t> grid;
  double prev = curve_lower(curve, turning, a_lo);
  grid.push_back(turning);
  std::uint64_t n = turning;
  while (n < top) {
    n = std::max(n + 1, n + n / 1024);
    double cur = curve_lower(curve, n, a_lo);
    if (cur < prev)
      throw std::logic_error("curve: lower bound decreased at " + std::to_string(n));
    prev = cur;
    grid.push_back(n);
  }
  while (n <= kCurveArgMax / 2) {
    n *= 2;
    double cur = curve_lower(curve, n, a_lo);
    if (cur < prev)
      throw std::logic_error("curve: lower bound decreased at " + std::to_string(n));
    prev = cur;
    grid.push_back(n);
  }
  return grid;
}

// Smallest X >= turning with curve(X) > bound (exact ties keep moving up).
std::uint64_t curve_crossing(Curve curve, std::uint64_t turning, std::int64_t bound,
                             const Rational& a_lo) {
  const double b = static_cast<double>(bound);
  if (curve_lower(curve, turning, a_lo) > b) return turning;
  std::uint64_t lo = turning, hi = turning;
  for (;;) {
    if (hi > kCurveArgMax / 2)
      throw std::domain_error("curve: bound out of certified range");
    hi *= 2;
    if (curve_lower(curve, hi, a_lo) > b) break;
    lo = hi;
  }
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (curve_lower(curve, mid, a_lo) > b)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

SearchCertificate certified_cutoff(Family family, int k, std::int64_t bound) {
  if (family != Family::g0plus && family != Family::g0)
    throw std::domain_error("certified cutoff: curves exist for the g0 and g0plus families only");
  if (k != 2) throw std::domain_error("certified cutoff: curves are weight-2 only");
  if (bound < 0) throw std::domain_error("certified cutoff: bound must be nonnegative");

  const Rational a_lo = certified_lower(analysis_constants().a0_plus);
  SearchCertificate cert;
  cert.family = family;
  cert.k = k;
  cert.bound = bound;
  cert.a0_plus_lower = a_lo.to_double();

  if (family == Family::g0plus) {
    cert.nonsquare_turning_point = kTurningNonsquare;
    cert.nonsquare_crossing =
        curve_crossing(Curve::g0plus_nonsquare, kTurningNonsquare, bound, a_lo);
    cert.square_turning_point = kTurningSquare;
    cert.square_m_threshold = curve_crossing(Curve::g0plus_square, kTurningSquare, bound, a_lo);
    cert.grid = walk_monotone(Curve::g0plus_nonsquare, kTurningNonsquare,
                              8 * cert.nonsquare_crossing, a_lo);
    walk_monotone(Curve::g0plus_square, kTurningSquare, 8 * cert.square_m_threshold, a_lo);
    cert.cutoff = std::max(cert.nonsquare_crossing - 1,
                           cert.square_m_threshold * cert.square_m_threshold - 1);
  } else {
    cert.nonsquare_turning_point = kTurningG0;
    cert.nonsquare_crossing = curve_crossing(Curve::g0_all, kTurningG0, bound, a_lo);
    cert.grid = walk_monotone(Curve::g0_all, kTurningG0, 8 * cert.nonsquare_crossing, a_lo);
    cert.cutoff = cert.nonsquare_crossing - 1;
  }
  cert.certified = true;
  return cert;
}

bool certificate_self_check(const SearchCertificate& cert) {
  if (!cert.certified) return false;
  try {
    const Rational a_lo = certified_lower(analysis_constants().a0_plus);
    if (std::abs(a_lo.to_double() - cert.a0_plus_lower) > 1e-9) return false;
    const double b = static_cast<double>(cert.bound);
    const Curve main_curve =
        cert.family == Family::g0plus ? Curve::g0plus_nonsquare : Curve::g0_all;

    if (curve_lower(main_curve, cert.nonsquare_crossing, a_lo) <= b) return false;
    if (cert.nonsquare_crossing > cert.nonsquare_turning_point &&
        curve_lower(main_curve, cert.nonsquare_crossing - 1, a_lo) > b)
      return false;

    // Re-walk the stored grid.
    if (cert.grid.empty() || cert.grid.front() != cert.nonsquare_turning_point) return false;
    double prev = curve_lower(main_curve, cert.grid.front(), a_lo);
    for (std::size_t i = 1; i < cert.grid.size(); ++i) {
      if (cert.grid[i] <= cert.grid[i - 1]) return false;
      double cur = curve_lower(main_curve, cert.grid[i], a_lo);
      if (cur < prev) return false;
      prev = cur;
    }

    std::uint64_t expect_cutoff = cert.nonsquare_crossing - 1;
    if (cert.family == Family::g0plus) {
      if (cert.square_turning_point != kTurningSquare) return false;
      if (curve_lower(Curve::g0plus_square, cert.square_m_threshold, a_lo) <= b) return false;
      if (cert.square_m_threshold > cert.square_turning_point &&
          curve_lower(Curve::g0plus_square, cert.square_m_threshold - 1, a_lo) > b)
        return false;
      walk_monotone(Curve::g0plus_square, cert.square_turning_point,
                    8 * cert.square_m_threshold, a_lo);
      expect_cutoff =
          std::max(expect_cutoff, cert.square_m_threshold * cert.square_m_threshold - 1);
    } else if (cert.square_turning_point != 0 || cert.square_m_threshold != 0) {
      return false;
    }
    return cert.cutoff == expect_cutoff;
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Enumeration and coverage
// ---------------------------------------------------------------------------

std::vector<std::uint32_t> EnumerationResult::fiber(std::int64_t value) const {
  std::vector<std::uint32_t> out;
  for (const auto& [n, dim] : levels)
    if (dim == value) out.push_back(n);
  return out;
}

EnumerationResult enumerate_small_dim(Family family, int k, std::int64_t bound,
                                      std::optional<std::uint64_t> cutoff_override,
                                      unsigned threads) {
  EnumerationResult res;
  res.family = family;
  res.k = k;
  res.bound = bound;
  if (cutoff_override) {
    res.certificate.family = family;
    res.certificate.k = k;
    res.certificate.bound = bound;
    res.certificate.cutoff = *cutoff_override;
    res.certificate.certified = false;
  } else {
    res.certificate = certified_cutoff(family, k, bound);
  }
  const std::uint64_t cutoff = res.certificate.cutoff;
  if (cutoff == 0 || cutoff > 100'000'000)
    throw std::domain_error("enumeration: cutoff out of supported range");

  SpfSieve::shared(static_cast<std::uint32_t>(cutoff));
  const std::size_t blocks = block_count(1, cutoff, kBlock);
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> hits(blocks);
  for_blocks(1, cutoff, kBlock, threads, [&](std::size_t slot, std::uint64_t lo, std::uint64_t hi) {
    DimensionSieve sieve(family, k, Registry::global());
    std::vector<std::int64_t> buf(hi - lo + 1);
    sieve.fill(lo, hi, buf);
    for (std::uint64_t n = lo; n <= hi; ++n)
      if (buf[n - lo] <= bound)
        hits[slot].emplace_back(static_cast<std::uint32_t>(n), buf[n - lo]);
  });
  for (auto& v : hits) res.levels.insert(res.levels.end(), v.begin(), v.end());
  return res;
}

SharpBoundReport verify_sharp_bound(std::uint64_t max_level, unsigned threads) {
  SharpBoundReport rep;
  rep.max_level = max_level;
  if (max_level == 0 || max_level > 100'000'000)
    throw std::domain_error("sharp bound: level range unsupported");

  const SpfSieve& spf = SpfSieve::shared(static_cast<std::uint32_t>(max_level));
  const std::size_t blocks = block_count(1, max_level, kBlock);
  std::vector<std::vector<std::uint32_t>> viol(blocks), eq(blocks);
  for_blocks(1, max_level, kBlock, threads,
             [&](std::size_t slot, std::uint64_t lo, std::uint64_t hi) {
               DimensionSieve sieve(Family::g0plus, 2, Registry::global());
               std::vector<std::int64_t> buf(hi - lo + 1);
               sieve.fill(lo, hi, buf);
               for (std::uint64_t n = lo; n <= hi; ++n) {
                 const std::int64_t lhs = 12 * buf[n - lo];
                 const std::int64_t rhs = static_cast<std::int64_t>(n) + 1;
                 if (lhs > rhs) viol[slot].push_back(static_cast<std::uint32_t>(n));
                 else if (lhs == rhs) eq[slot].push_back(static_cast<std::uint32_t>(n));
               }
             });
  for (auto& v : viol) rep.violations.insert(rep.violations.end(), v.begin(), v.end());
  for (auto& v : eq) rep.equality_set.insert(rep.equality_set.end(), v.begin(), v.end());

  // Expected equality set: 35 together with the primes p = 11 (mod 12).
  std::vector<std::uint32_t> expect;
  for (std::uint64_t n = 1; n <= max_level; ++n)
    if (n == 35 || (spf.is_prime(n) && n % 12 == 11)) expect.push_back(static_cast<std::uint32_t>(n));
  rep.equality_set_is_expected = rep.equality_set == expect;
  return rep;
}

PowerOfTwoReport verify_power_of_two(std::uint32_t max_odd_level, int alpha_lo, int alpha_hi,
                                     std::span<const int> weights) {
  if (max_odd_level < 3) throw std::domain_error("power-of-two check: odd range too small");
  if (alpha_lo < 1 || alpha_hi < alpha_lo || alpha_hi > 24)
    throw std::domain_error("power-of-two check: exponent range unsupported");
  for (int k : weights)
    if (k < 2 || k % 2 != 0)
      throw std::domain_error("power-of-two check: weights must be even and >= 2");
  const std::uint64_t top = (std::uint64_t(1) << alpha_hi) * max_odd_level;
  if (top > 2'000'000'000) throw std::domain_error("power-of-two check: range beyond the sieve");

  PowerOfTwoReport rep;
  for (int k : weights) {
    DimensionSieve sieve(Family::g0plus, k, Registry::global());
    for (std::uint64_t n = 3; n <= max_odd_level; n += 2) {
      if (moebius(n) == 0) continue;
      const std::int64_t phi = static_cast<std::int64_t>(euler_phi(n));
      for (int a = alpha_lo; a <= alpha_hi; ++a) {
        const std::uint64_t level = (std::uint64_t(1) << a) * n;
        if (a == 1) {
          const std::int64_t got = sieve.at(level);
          const std::int64_t cap = (k - 1) * phi;
          ++rep.checked;
          if (got > cap) rep.failures.push_back({level, k, got, cap});
        } else if (a >= 4) {
          const std::int64_t got = sieve.at(level);
          std::int64_t want;
          if (a == 4) {
            const std::int64_t half = (k - 1) * phi;
            if (half % 2 != 0) {
              rep.failures.push_back({level, k, got, -1});
              ++rep.checked;
              continue;
            }
            want = half / 2;
          } else {
            want = checked_mul((k - 1) * phi, std::int64_t(1) << (a - 5));
          }
          ++rep.checked;
          if (got != want) rep.failures.push_back({level, k, got, want});
        }
      }
    }
  }
  return rep;
}

MissingValueReport missing_values(Family family, int k, std::int64_t max_value,
                                  std::uint64_t cutoff, unsigned threads) {
  if (max_value < 0) throw std::domain_error("missing values: max value must be nonnegative");
  if (cutoff == 0 || cutoff > 100'000'000)
    throw std::domain_error("missing values: cutoff out of supported range");
  MissingValueReport rep;
  rep.family = family;
  rep.k = k;
  rep.max_value = max_value;
  rep.cutoff = cutoff;

  SpfSieve::shared(static_cast<std::uint32_t>(cutoff));
  const std::size_t blocks = block_count(1, cutoff, kBlock);
  std::vector<std::vector<char>> seen(blocks);
  for_blocks(1, cutoff, kBlock, threads, [&](std::size_t slot, std::uint64_t lo, std::uint64_t hi) {
    seen[slot].assign(static_cast<std::size_t>(max_value) + 1, 0);
    DimensionSieve sieve(family, k, Registry::global());
    std::vector<std::int64_t> buf(hi - lo + 1);
    sieve.fill(lo, hi, buf);
    for (std::int64_t v : buf)
      if (v <= max_value) seen[slot][static_cast<std::size_t>(v)] = 1;
  });

  std::vector<char> attained(static_cast<std::size_t>(max_value) + 1, 0);
  for (const auto& s : seen)
    for (std::size_t v = 0; v < attained.size(); ++v) attained[v] |= s[v];
  for (std::int64_t v = 0; v <= max_value; ++v) {
    if (attained[static_cast<std::size_t>(v)])
      ++rep.attained_count;
    else
      rep.missing.push_back(v);
  }

  if (!rep.missing.empty()) {
    // A nonempty missing set is a claim about every level, not just the
    // scanned ones; it stands only if no level past the cutoff can attain a
    // value this small.
    SearchCertificate cert = certified_cutoff(family, k, max_value);
    if (cert.cutoff > cutoff)
      throw std::invalid_argument(
          "missing values: scan cutoff " + std::to_string(cutoff) +
          " does not cover the certified crossing; rerun with cutoff >= " +
          std::to_string(cert.cutoff));
  }
  rep.certified = true;
  return rep;
}

std::uint64_t CoverageHistogram::attained() const {
  std::uint64_t n = 0;
  for (std::uint64_t c : count) n += c > 0 ? 1 : 0;
  return n;
}

CoverageHistogram value_coverage(Family family, int k, std::uint64_t max_level,
                                 std::int64_t max_value, unsigned threads) {
  if (max_value < 0) throw std::domain_error("coverage: max value must be nonnegative");
  if (max_level == 0 || max_level > 100'000'000)
    throw std::domain_error("coverage: level range unsupported");
  CoverageHistogram hist;
  hist.family = family;
  hist.k = k;
  hist.max_level = max_level;
  hist.max_value = max_value;

  SpfSieve::shared(static_cast<std::uint32_t>(max_level));
  const std::size_t blocks = block_count(1, max_level, kBlock);
  std::vector<std::vector<std::uint64_t>> part(blocks);
  for_blocks(1, max_level, kBlock, threads,
             [&](std::size_t slot, std::uint64_t lo, std::uint64_t hi) {
               part[slot].assign(static_cast<std::size_t>(max_value) + 1, 0);
               DimensionSieve sieve(family, k, Registry::global());
               std::vector<std::int64_t> buf(hi - lo + 1);
               sieve.fill(lo, hi, buf);
               for (std::int64_t v : buf)
                 if (v >= 0 && v <= max_value) ++part[slot][static_cast<std::size_t>(v)];
             });

  hist.count.assign(static_cast<std::size_t>(max_value) + 1, 0);
  for (const auto& p : part)
    for (std::size_t v = 0; v < hist.count.size(); ++v) hist.count[v] += p[v];

  std::uint64_t best_min = 0, best_max = 0;
  for (std::int64_t v = 0; v <= max_value; ++v) {
    const std::uint64_t c = hist.count[static_cast<std::size_t>(v)];
    if (c == 0) continue;
    if (hist.min_value_arg < 0 || c < best_min) best_min = c, hist.min_value_arg = v;
    if (hist.max_value_arg < 0 || c > best_max) best_max = c, hist.max_value_arg = v;
  }
  return hist;
}

// ---------------------------------------------------------------------------
// Averages and proportions
// ---------------------------------------------------------------------------

AverageCheck average_ratio(std::string_view target, int k, std::uint64_t limit, unsigned threads) {
  if (limit == 0 || limit > 100'000'000)
    throw std::domain_error("average: level range unsupported");
  if (k < 2) throw std::domain_error("average: weight must be >= 2");
  AverageCheck chk;
  chk.target = std::string(target);
  chk.k = k;
  chk.limit = limit;

  const Constants& C = analysis_constants();
  const double x = static_cast<double>(limit);
  const double pi = C.pi.value;
  const double z3 = C.zeta3.value;

  SpfSieve::shared(static_cast<std::uint32_t>(limit));
  const std::size_t blocks = block_count(1, limit, kBlock);

  if (target == "rho0" || target == "rho1") {
    const bool zero = target == "rho0";
    if (zero && k % 2 != 0)
      throw std::domain_error("average: rho0 needs an even weight");
    std::vector<Rational> part(blocks, Rational(0));
    for_blocks(1, limit, kBlock, threads,
               [&](std::size_t slot, std::uint64_t lo, std::uint64_t hi) {
                 DimensionSieve num(zero ? Family::g0plus : Family::g1plus, k,
                                    Registry::global());
                 DimensionSieve den(zero ? Family::g0 : Family::g1, k, Registry::global());
                 std::vector<std::int64_t> nb(hi - lo + 1), db(hi - lo + 1);
                 num.fill(lo, hi, nb);
                 den.fill(lo, hi, db);
                 Rational sum(0);
                 for (std::size_t i = 0; i < nb.size(); ++i)
                   sum += db[i] == 0 ? Rational(1) : Rational(nb[i], db[i]);
                 part[slot] = std::move(sum);
               });
    for (const auto& p : part) chk.empirical_sum += p;
    chk.predicted_sum = (zero ? C.b0.value : C.b1.value) * x;
  } else {
    const Family family = family_from_name(target);
    if (family_group(family) == Group::gamma0 && k % 2 != 0)
      throw std::domain_error("average: the g0 family needs an even weight");
    std::vector<std::int64_t> part(blocks, 0);
    for_blocks(1, limit, kBlock, threads,
               [&](std::size_t slot, std::uint64_t lo, std::uint64_t hi) {
                 DimensionSieve sieve(family, k, Registry::global());
                 std::vector<std::int64_t> buf(hi - lo + 1);
                 sieve.fill(lo, hi, buf);
                 std::int64_t sum = 0;
                 for (std::int64_t v : buf) sum = checked_add(sum, v);
                 part[slot] = sum;
               });
    BigInt total(0);
    for (std::int64_t p : part) total += p;
    chk.empirical_sum = Rational(total);

    const double km1 = static_cast<double>(k - 1);
    switch (family) {
      case Family::g0:
        chk.predicted_sum = 5.0 * km1 / (4.0 * pi * pi) * x * x / 2.0;
        break;
      case Family::g0star:
        chk.predicted_sum = 15.0 * km1 / (2.0 * std::pow(pi, 4)) * x * x / 2.0;
        break;
      case Family::g0plus:
        chk.predicted_sum = 45.0 * km1 / std::pow(pi, 6) * x * x / 2.0;
        break;
      case Family::g1:
        chk.predicted_sum = km1 / (24.0 * z3) * x * x * x / 3.0;
        break;
      case Family::g1star:
        chk.predicted_sum = km1 / (24.0 * z3 * z3) * x * x * x / 3.0;
        break;
      default:
        chk.predicted_sum = km1 / (24.0 * z3 * z3 * z3) * x * x * x / 3.0;
        break;
    }
  }
  chk.ratio = chk.empirical_sum.to_double() / chk.predicted_sum;
  return chk;
}

RhoFloorReport rho_floor_scan(int k, std::uint64_t lo, std::uint64_t hi, unsigned threads) {
  if (lo == 0 || hi < lo || hi > 100'000'000)
    throw std::domain_error("proportion floor: level range unsupported");
  if (k < 2) throw std::domain_error("proportion floor: weight must be >= 2");
  RhoFloorReport rep;
  rep.k = k;
  rep.lo = lo;
  rep.hi = hi;

  SpfSieve::shared(static_cast<std::uint32_t>(hi));
  const std::size_t blocks = block_count(lo, hi, kBlock);
  std::vector<std::pair<Rational, std::uint64_t>> part(blocks, {Rational(2), 0});
  for_blocks(lo, hi, kBlock, threads, [&](std::size_t slot, std::uint64_t blo, std::uint64_t bhi) {
    DimensionSieve num(Family::g1plus, k, Registry::global());
    DimensionSieve den(Family::g1, k, Registry::global());
    std::vector<std::int64_t> nb(bhi - blo + 1), db(bhi - blo + 1);
    num.fill(blo, bhi, nb);
    den.fill(blo, bhi, db);
    Rational best(2);
    std::uint64_t arg = 0;
    for (std::uint64_t n = blo; n <= bhi; ++n) {
      Rational r = db[n - blo] == 0 ? Rational(1) : Rational(nb[n - blo], db[n - blo]);
      if (arg == 0 || r < best) best = std::move(r), arg = n;
    }
    part[slot] = {std::move(best), arg};
  });

  for (const auto& [val, arg] : part) {
    if (arg == 0) continue;
    if (rep.argmin == 0 || val < rep.minimum) rep.minimum = val, rep.argmin = arg;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Inequality suite
// ---------------------------------------------------------------------------

namespace {

// Integer values of one registry rule along a factorization.
struct IntView {
  const MultiplicativeFunction* fn = nullptr;
  std::unordered_map<std::uint64_t, std::int64_t> memo = {};

  std::int64_t at(std::uint64_t p, std::uint32_t a) {
    const std::uint64_t key = (p << 8) | a;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Rational v = fn->at_prime_power(p, a);
    const std::int64_t r = v.as_integer().get_si();
    memo.emplace(key, r);
    return r;
  }

  std::int64_t eval(const Factorization& f) {
    std::int64_t r = 1;
    for (const auto& [p, a] : f.prime_powers()) r = checked_mul(r, at(p, a));
    return r;
  }
};

// phi(N) log2(N) >= (N - phi(N)) as an exact claim N^phi >= 2^(N-phi):
// a double comparison decides when safely away from equality, else exact
// big-integer powers settle it.
bool totient_log_inequality(std::uint64_t n, std::uint64_t phi) {
  if (n == 1) return true;
  const double lhs = static_cast<double>(phi) * std::log2(static_cast<double>(n));
  const double rhs = static_cast<double>(n - phi);
  const double margin = 1e-9 * (lhs + rhs) + 1e-9;
  if (lhs > rhs + margin) return true;
  if (lhs < rhs - margin) return false;
  BigInt a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), n, static_cast<unsigned long>(phi));
  mpz_ui_pow_ui(b.get_mpz_t(), 2, static_cast<unsigned long>(n - phi));
  return a >= b;
}

}  // namespace

LemmaSuiteReport lemma_suite(std::uint64_t max_level, unsigned threads) {
  if (max_level < 2 || max_level > 10'000'000)
    throw std::domain_error("inequality suite: level range unsupported");
  LemmaSuiteReport rep;
  rep.max_level = max_level;

  const Registry& reg = Registry::global();
  const Constants& C = analysis_constants();
  // Upper enclosure edges: sound right-hand sides for the ">= constant"
  // claims checked below.
  const Rational a0_hi = certified_upper(C.a0_plus);
  // 6/pi^2 = 1/zeta(2); the upper edge is 1 over the lower zeta(2) edge.
  const Rational inv_zeta2_hi = Rational(1) / certified_lower(C.zeta2);
  const Rational inv_zeta2_lo = Rational(1) / certified_upper(C.zeta2);

  SpfSieve::shared(static_cast<std::uint32_t>(max_level));
  const std::size_t blocks = block_count(1, max_level, kBlock);
  std::vector<std::vector<std::string>> viol(blocks);
  std::vector<std::uint64_t> nchecks(blocks, 0);

  for_blocks(1, max_level, kBlock, threads, [&](std::size_t slot, std::uint64_t lo,
                                                std::uint64_t hi) {
    const SpfSieve& spf = SpfSieve::shared(static_cast<std::uint32_t>(max_level));
    IntView n_s0{&reg.at("n_s0")}, n_s0_plus{&reg.at("n_s0_plus")}, n_s0_star{&reg.at("n_s0_star")};
    IntView nu_inf{&reg.at("nu_inf")}, nu_inf_plus{&reg.at("nu_inf_plus")},
        nu_inf_star{&reg.at("nu_inf_star")};
    IntView nu2{&reg.at("nu2")}, nu2_plus{&reg.at("nu2_plus")}, nu2_star{&reg.at("nu2_star")};
    IntView nu3{&reg.at("nu3")}, nu3_plus{&reg.at("nu3_plus")}, nu3_star{&reg.at("nu3_star")};
    IntView u{&reg.at("u")}, u_plus{&reg.at("u_plus")};
    DimensionSieve gplus(Family::g0plus, 2, reg);
    std::vector<std::int64_t> gbuf(hi - lo + 1);
    gplus.fill(lo, hi, gbuf);

    auto fail = [&](const char* what, std::uint64_t n) {
      viol[slot].push_back(std::string(what) + " at N=" + std::to_string(n));
    };
    std::uint64_t& cnt = nchecks[slot];

    for (std::uint64_t n = lo; n <= hi; ++n) {
      const Factorization f = factorize(n, spf);
      const std::uint64_t phi = euler_phi(f);
      const std::uint64_t tau = divisor_count(f);
      const unsigned omega = static_cast<unsigned>(f.size());
      const std::int64_t two_omega = std::int64_t(1) << omega;

      // Prime-count growth: 16 * 11^omega <= 14641 * N.
      ++cnt;
      std::int64_t pow11 = 1;
      for (unsigned i = 0; i < omega; ++i) pow11 = checked_mul(pow11, 11);
      if (checked_mul(16, pow11) > checked_mul(14641, static_cast<std::int64_t>(n)))
        fail("prime-count growth bound", n);

      // Totient log bound: N^phi >= 2^(N - phi).
      ++cnt;
      if (!totient_log_inequality(n, phi)) fail("totient log bound", n);

      const std::int64_t s0p = n_s0_plus.eval(f);
      const std::int64_t s0 = n_s0.eval(f);
      const std::int64_t s0s = n_s0_star.eval(f);
      const std::int64_t vip = nu_inf_plus.eval(f);
      const std::int64_t vi = nu_inf.eval(f);
      const std::int64_t vis = nu_inf_star.eval(f);
      const std::int64_t v2p = nu2_plus.eval(f), v3p = nu3_plus.eval(f);
      const std::int64_t v2 = nu2.eval(f), v3 = nu3.eval(f);
      const std::int64_t v2s = nu2_star.eval(f), v3s = nu3_star.eval(f);

      // Scaled-s0+ infimum: N s0+(N) >= A phi(N), via the certified upper
      // edge of A (a fortiori bound).
      ++cnt;
      if (Rational(s0p) < a0_hi * Rational(BigInt(phi))) fail("s0+ infimum constant", n);

      // Plus-function size bounds.
      ++cnt;
      if (s0p > static_cast<std::int64_t>(phi)) fail("s0+ totient bound", n);
      ++cnt;
      if (std::abs(v2p) > two_omega) fail("nu2+ count bound", n);
      ++cnt;
      if (std::abs(v3p) > two_omega) fail("nu3+ count bound", n);
      ++cnt;
      if (vip < 0) fail("nu_inf+ sign", n);
      ++cnt;
      if (checked_mul(vip, vip) > static_cast<std::int64_t>(n)) fail("nu_inf+ square bound", n);

      // Cusp-count comparisons: u+ <= u <= N tau(N).
      const std::int64_t un = u.eval(f), up = u_plus.eval(f);
      ++cnt;
      if (up > un) fail("u+ vs u", n);
      ++cnt;
      if (un > checked_mul(static_cast<std::int64_t>(n), static_cast<std::int64_t>(tau)))
        fail("u vs N tau", n);

      // Full-space counts: s0 >= 1; 0 <= nu2, nu3 <= 2^omega;
      // 0 <= nu_inf <= sqrt(N) s0.
      ++cnt;
      if (s0 < static_cast<std::int64_t>(n)) fail("s0 lower bound", n);
      ++cnt;
      if (v2 < 0 || v2 > two_omega) fail("nu2 count bound", n);
      ++cnt;
      if (v3 < 0 || v3 > two_omega) fail("nu3 count bound", n);
      ++cnt;
      if (vi < 0 || checked_mul(static_cast<std::int64_t>(n), checked_mul(vi, vi)) >
                        checked_mul(s0, s0))
        fail("nu_inf square bound", n);

      // Weight-2 newform ceiling: 12 g+ <= phi + 7 * 2^omega + 12.
      const std::int64_t g12 = 12 * gbuf[n - lo];
      ++cnt;
      if (g12 > static_cast<std::int64_t>(phi) + 7 * two_omega + 12)
        fail("newform dimension ceiling", n);

      // Structured sharp-bound cases.
      const bool is_prime = omega == 1 && f.prime_powers()[0].a == 1;
      const std::int64_t cap = static_cast<std::int64_t>(n) + 1;
      if (is_prime) {
        ++cnt;
        if (g12 > cap || (g12 == cap) != (n % 12 == 11)) fail("prime sharp bound", n);
      }
      if (n > 1 && !is_prime && omega <= 2) {
        ++cnt;
        if (g12 > cap || (g12 == cap) != (n == 35)) fail("two-prime composite bound", n);
      }
      bool has_sixth = false, two_big = false;
      unsigned big5 = 0;
      std::uint64_t pmax = 1;
      for (const auto& [p, a] : f.prime_powers()) {
        if (a >= 6) has_sixth = true;
        if (p > 5) ++big5;
        pmax = std::max(pmax, p);
      }
      two_big = big5 >= 2;
      if (has_sixth) {
        ++cnt;
        if (g12 > static_cast<std::int64_t>(n) - 6) fail("sixth-power drop", n);
      }
      if (omega >= 3 && two_big) {
        ++cnt;
        if (g12 > static_cast<std::int64_t>(n) - 9) fail("three-prime drop", n);
      }
      if (n % 2 == 0 || n % 3 == 0) {
        if (pmax > 41) {
          ++cnt;
          if (g12 > static_cast<std::int64_t>(n)) fail("small-factor drop", n);
        }
      }

      // Star-function size bounds: 6/pi^2 < s0* <= 1, |nu2*|, |nu3*| <= 1,
      // 0 <= nu_inf* with nu_inf*^2 <= 2 phi^2 / N.  The factor 2 is needed:
      // the per-prime ratio nu_inf*(p^a) p^{a/2} / phi(p^a) is at most 1 for
      // odd p but reaches sqrt(2) at p = 2, so N = 2, 18, 50, ... are
      // equality cases of the corrected bound.
      ++cnt;
      if (Rational(s0s) <= inv_zeta2_hi * Rational(BigInt(n))) fail("s0* infimum constant", n);
      ++cnt;
      if (s0s > static_cast<std::int64_t>(n)) fail("s0* upper bound", n);
      ++cnt;
      if (std::abs(v2s) > 1) fail("nu2* unit bound", n);
      ++cnt;
      if (std::abs(v3s) > 1) fail("nu3* unit bound", n);
      ++cnt;
      if (vis < 0 || BigInt(n) * BigInt(vis) * BigInt(vis) > 2 * BigInt(phi) * BigInt(phi))
        fail("nu_inf* totient bound", n);
    }
  });

  for (auto& v : viol) rep.violations.insert(rep.violations.end(), v.begin(), v.end());
  for (std::uint64_t c : nchecks) rep.checks += c;

  // Desk-scale checks, appended once.
  {
    // Primorial growth of s0 against loglog: within 25% of 6 e^gamma / pi^2
    // once at least seven primes are in.
    const double scale = 6.0 * std::exp(C.euler_gamma.value) / (C.pi.value * C.pi.value);
    Rational s0(1);
    double log_primorial = 0;
    unsigned idx = 0;
    const SpfSieve& spf = SpfSieve::shared(100);
    for (std::uint64_t p : spf.primes()) {
      if (p > 47) break;
      s0 *= Rational(1) + Rational(1, static_cast<std::int64_t>(p));
      log_primorial += std::log(static_cast<double>(p));
      ++idx;
      if (idx < 7) continue;
      ++rep.checks;
      const double ratio = s0.to_double() / (scale * std::log(log_primorial));
      if (ratio < 0.75 || ratio > 1.25)
        rep.violations.push_back("primorial scale check at y=" + std::to_string(p));
    }

    // Squarefree density: prod_{p <= y} (1 - 1/p^2) within 1.1/y of 6/pi^2.
    const SpfSieve& grid_spf = SpfSieve::shared(10'000);
    for (std::uint64_t y : {10ull, 30ull, 100ull, 300ull, 1000ull, 3000ull, 10000ull}) {
      Rational prod(1);
      for (std::uint64_t p : grid_spf.primes()) {
        if (p > y) break;
        prod *= Rational(1) - Rational(1, static_cast<std::int64_t>(p * p));
      }
      ++rep.checks;
      const Rational tol = Rational(11, 10) / Rational(BigInt(y));
      const bool inside = prod - inv_zeta2_lo <= tol && inv_zeta2_hi - prod <= tol;
      if (!inside) rep.violations.push_back("squarefree density grid at y=" + std::to_string(y));
    }
  }
  return rep;
}

}  // namespace cuspdim
