#pragma once

// Range analysis over the dimension formulas: certified search cutoffs from
// the explicit lower-bound curves, exhaustive small-dimension enumeration,
// sharp-bound and power-of-two verification, missing-value detection, value
// coverage, exact average-order ratios, and newform-proportion floors.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cuspdim/dimensions.hpp"
#include "cuspdim/euler_product.hpp"
#include "cuspdim/rational.hpp"

namespace cuspdim {

// Certificate that dim(N, k) > bound for every N > cutoff, established by a
// monotone lower-bound curve: grid-verified monotonicity past the turning
// point, then binary search for the crossing (ties resolve upward).  For the
// g0plus curve the square levels N = M^2 carry their own branch.
struct SearchCertificate {
  Family family = Family::g0plus;
  int k = 2;
  std::int64_t bound = 0;
  std::uint64_t cutoff = 0;

  std::uint64_t nonsquare_turning_point = 0;
  std::uint64_t nonsquare_crossing = 0;
  std::uint64_t square_turning_point = 0;  // in M; 0 when the family has no square branch
  std::uint64_t square_m_threshold = 0;
  double a0_plus_lower = 0;  // certified enclosure edge fed into the curve
  std::vector<std::uint64_t> grid;  // monotonicity grid actually checked
  bool certified = false;           // false when the cutoff was supplied by the caller
};

// family must be g0plus or g0, k must be 2 (the curves are weight-2).
SearchCertificate certified_cutoff(Family family, int k, std::int64_t bound);

// Re-evaluates the curve at the stored crossing points and re-walks the
// monotonicity grid.
bool certificate_self_check(const SearchCertificate& cert);

struct EnumerationResult {
  Family family = Family::g0plus;
  int k = 2;
  std::int64_t bound = 0;
  SearchCertificate certificate;
  std::vector<std::pair<std::uint32_t, std::int64_t>> levels;  // (N, dim), N ascending

  std::vector<std::uint32_t> fiber(std::int64_t value) const;  // levels with dim == value
};

// All levels with dim <= bound.  Without a cutoff override the scan range
// comes from certified_cutoff and the result is complete; with one, the
// certificate is marked uncertified.
EnumerationResult enumerate_small_dim(Family family, int k, std::int64_t bound,
                                      std::optional<std::uint64_t> cutoff_override = {},
                                      unsigned threads = 1);

// Weight-2 newform bound 12 g0+(N,2) <= N + 1: violations (expected none)
// and the equality set, which should be {35} together with the primes
// p = 11 (mod 12).
struct SharpBoundReport {
  std::uint64_t max_level = 0;
  std::vector<std::uint32_t> violations;
  std::vector<std::uint32_t> equality_set;
  bool equality_set_is_expected = false;  // {35} + primes 11 mod 12, checked exactly
};

SharpBoundReport verify_sharp_bound(std::uint64_t max_level, unsigned threads = 1);

// Exact power-of-two collapse: for odd squarefree N >= 3,
//   g0+(2^a N, k) = (k-1) 2^{a-5} phi(N) for a >= 4, and
//   g0+(2N, k) <= (k-1) phi(N).
struct PowerOfTwoFailure {
  std::uint64_t level = 0;
  int k = 0;
  std::int64_t got = 0, want = 0;
};

struct PowerOfTwoReport {
  std::uint64_t checked = 0;
  std::vector<PowerOfTwoFailure> failures;
  bool ok() const { return failures.empty(); }
};

PowerOfTwoReport verify_power_of_two(std::uint32_t max_odd_level, int alpha_lo, int alpha_hi,
                                     std::span<const int> weights);

// Values in [0, max_value] never attained by dim(N, k) for any N.  The scan
// runs to `cutoff`; when the missing set is nonempty the cutoff must cover
// the certified curve crossing for max_value, else the result would be
// unsound and the call is a precondition error naming the required cutoff.
struct MissingValueReport {
  Family family = Family::g0;
  int k = 2;
  std::int64_t max_value = 0;
  std::uint64_t cutoff = 0;
  std::vector<std::int64_t> missing;
  std::uint64_t attained_count = 0;  // distinct values <= max_value that occur
  bool certified = false;
};

MissingValueReport missing_values(Family family, int k, std::int64_t max_value,
                                  std::uint64_t cutoff, unsigned threads = 1);

// Multiplicity histogram of dim(N, k) over N <= max_level for values
// 0..max_value.
struct CoverageHistogram {
  Family family = Family::g0plus;
  int k = 2;
  std::uint64_t max_level = 0;
  std::int64_t max_value = 0;
  std::vector<std::uint64_t> count;  // index = value
  std::int64_t min_value_arg = -1;   // value of smallest multiplicity (ties: smallest value)
  std::int64_t max_value_arg = -1;
  std::uint64_t attained() const;    // values with count > 0
};

CoverageHistogram value_coverage(Family family, int k, std::uint64_t max_level,
                                 std::int64_t max_value, unsigned threads = 1);

// Exact partial sum against the predicted main term:
//   linear families    c x^2 / 2      (g0 family)
//   quadratic families c x^3 / 3      (g1 family)
//   proportions        B x            (rho0, rho1)
// target is a family name or "rho0"/"rho1".
struct AverageCheck {
  std::string target;
  int k = 2;
  std::uint64_t limit = 0;
  Rational empirical_sum;    // exact
  double predicted_sum = 0;  // main-term antiderivative
  double ratio = 0;          // empirical / predicted, one final division
};

AverageCheck average_ratio(std::string_view target, int k, std::uint64_t limit,
                           unsigned threads = 1);

// Minimum of rho1(N, k) over a level window, exact.
struct RhoFloorReport {
  int k = 2;
  std::uint64_t lo = 0, hi = 0;
  Rational minimum;
  std::uint64_t argmin = 0;
};

RhoFloorReport rho_floor_scan(int k, std::uint64_t lo, std::uint64_t hi, unsigned threads = 1);

// The non-asymptotic inequalities behind the bound and average-order
// arguments, checked on every level <= max_level within each hypothesis
// class.  All comparisons are exact (integer or rational); the two
// power-inequality lemmas fall back to exact big-integer powers when a
// directed-rounding comparison is inconclusive.
struct LemmaSuiteReport {
  std::uint64_t max_level = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

LemmaSuiteReport lemma_suite(std::uint64_t max_level, unsigned threads = 1);

}  // namespace cuspdim
