// The analysis layer: certified cutoffs and their self-checks, enumeration
// completeness, the sharp bound, the power-of-two collapse, missing-value
// soundness, coverage histograms, average-order ratios, the proportion
// floor, and the lemma suite.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cuspdim/analysis.hpp"
#include "cuspdim/dimensions.hpp"

using namespace cuspdim;

TEST_CASE("certified cutoff for the weight-two newform curve") {
  SearchCertificate cert = certified_cutoff(Family::g0plus, 2, 100);
  CHECK(cert.certified);
  CHECK(cert.bound == 100);
  // The crossing sits a little above 131,000; past it the lower-bound curve
  // exceeds 100 everywhere, so the cutoff is comfortably below 132,000.
  CHECK(cert.nonsquare_crossing > 100'000);
  CHECK(cert.cutoff < 132'000);
  CHECK(cert.cutoff >= cert.nonsquare_crossing - 1);
  // Square levels have their own branch in M = sqrt(N).
  CHECK(cert.square_m_threshold > 100);
  CHECK(cert.square_m_threshold < 400);
  CHECK(!cert.grid.empty());
  CHECK(certificate_self_check(cert));

  // Tampering with the stored crossing must be detected.
  SearchCertificate forged = cert;
  forged.cutoff += 4096;
  CHECK(!certificate_self_check(forged));
}

TEST_CASE("certified cutoff for the full-space curve") {
  SearchCertificate cert = certified_cutoff(Family::g0, 2, 1000);
  CHECK(cert.certified);
  // The full-space dimension exceeds 1,000 past 13,500.
  CHECK(cert.cutoff <= 13'500);
  CHECK(cert.cutoff > 10'000);
  CHECK(certificate_self_check(cert));
  CHECK_THROWS_AS(certified_cutoff(Family::g1, 2, 10), std::domain_error);
  CHECK_THROWS_AS(certified_cutoff(Family::g0plus, 4, 10), std::domain_error);
}

TEST_CASE("enumeration is exhaustive and cutoff-stable") {
  EnumerationResult certified = enumerate_small_dim(Family::g0plus, 2, 3, {}, 4);
  CHECK(certified.certificate.certified);
  // Re-running with a caller-supplied larger range finds nothing new.
  EnumerationResult wider =
      enumerate_small_dim(Family::g0plus, 2, 3, certified.certificate.cutoff + 50'000, 4);
  CHECK(!wider.certificate.certified);
  CHECK(certified.levels == wider.levels);

  // Levels ascend, every value is within the bound, and the enumerated
  // pairs match a direct scan.
  DimensionSieve sieve(Family::g0plus, 2);
  std::uint32_t previous = 0;
  for (const auto& [level, value] : certified.levels) {
    CHECK(level > previous);
    previous = level;
    CHECK(value <= 3);
    CHECK(value >= 0);
    CHECK(sieve.at(level) == value);
  }
  for (std::uint64_t n = 1; n <= certified.certificate.cutoff; ++n) {
    std::int64_t v = sieve.at(n);
    if (v <= 3)
      CHECK(std::binary_search(
          certified.levels.begin(), certified.levels.end(),
          std::make_pair(static_cast<std::uint32_t>(n), v)));
  }

  // The fiber helper slices one value.
  std::vector<std::uint32_t> zeros = certified.fiber(0);
  for (std::uint32_t n : zeros) CHECK(sieve.at(n) == 0);
  CHECK(!zeros.empty());
}

TEST_CASE("sharp bound and its equality set in a small window") {
  SharpBoundReport rep = verify_sharp_bound(34, 2);
  CHECK(rep.violations.empty());
  CHECK(rep.equality_set == std::vector<std::uint32_t>{11, 23});
  CHECK(rep.equality_set_is_expected);

  SharpBoundReport wider = verify_sharp_bound(2000, 2);
  CHECK(wider.violations.empty());
  CHECK(wider.equality_set_is_expected);
  // 35 is the only composite in the equality set.
  CHECK(std::find(wider.equality_set.begin(), wider.equality_set.end(), 35) !=
        wider.equality_set.end());
}

TEST_CASE("power-of-two collapse") {
  std::vector<int> weights = {2, 4};
  PowerOfTwoReport rep = verify_power_of_two(99, 1, 6, weights);
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
  // Spot checks of the collapsed form: g0plus(16 * 3, k) = (k - 1) phi(3)/2.
  CHECK(dimension(Family::g0plus, 48, 2).value == BigInt(1));
  CHECK(dimension(Family::g0plus, 96, 2).value == BigInt(2));
  CHECK(dimension(Family::g0plus, 192, 2).value == BigInt(4));
  CHECK(dimension(Family::g0plus, 48, 4).value == BigInt(3));
  CHECK_THROWS_AS(verify_power_of_two(99, 0, 6, weights), std::domain_error);
  std::vector<int> odd = {3};
  CHECK_THROWS_AS(verify_power_of_two(99, 4, 6, odd), std::domain_error);
}

TEST_CASE("missing-value reports are sound or refuse to answer") {
  // Verified complete: nothing below 51 is missing for the full space.
  MissingValueReport small = missing_values(Family::g0, 2, 50, 13'500, 2);
  CHECK(small.certified);
  CHECK(small.missing.empty());
  CHECK(small.attained_count == 51);

  // A cutoff too small to certify a nonempty missing set is refused.
  CHECK_THROWS_AS(missing_values(Family::g0, 2, 1000, 2'000, 2), std::invalid_argument);
}

TEST_CASE("coverage histogram equals a direct tally") {
  CoverageHistogram hist = value_coverage(Family::g0, 2, 4'000, 12, 3);
  DimensionSieve sieve(Family::g0, 2);
  std::vector<std::uint64_t> tally(13, 0);
  for (std::uint64_t n = 1; n <= 4'000; ++n) {
    std::int64_t v = sieve.at(n);
    if (v <= 12) ++tally[static_cast<std::size_t>(v)];
  }
  REQUIRE(hist.count.size() == tally.size());
  for (std::size_t v = 0; v < tally.size(); ++v) CHECK(hist.count[v] == tally[v]);
  CHECK(hist.attained() == 13);
  CHECK(hist.count[static_cast<std::size_t>(hist.min_value_arg)] <=
        hist.count[static_cast<std::size_t>(hist.max_value_arg)]);
}

TEST_CASE("average ratios settle near one") {
  AverageCheck g0 = average_ratio("g0", 2, 20'000, 3);
  CHECK(g0.ratio > 0.98);
  CHECK(g0.ratio < 1.02);
  AverageCheck g1 = average_ratio("g1", 2, 20'000, 3);
  CHECK(g1.ratio > 0.98);
  CHECK(g1.ratio < 1.02);
  AverageCheck g1p = average_ratio("g1plus", 3, 20'000, 3);
  CHECK(g1p.ratio > 0.98);
  CHECK(g1p.ratio < 1.02);
  AverageCheck r0 = average_ratio("rho0", 2, 20'000, 3);
  CHECK(r0.ratio > 0.9);
  CHECK(r0.ratio < 1.1);
  CHECK(r0.empirical_sum.sign() > 0);
  CHECK_THROWS_AS(average_ratio("g0", 3, 1'000, 1), std::domain_error);
  CHECK_THROWS_AS(average_ratio("rho0", 5, 1'000, 1), std::domain_error);
  CHECK_THROWS_AS(average_ratio("nope", 2, 1'000, 1), std::invalid_argument);
}

TEST_CASE("proportion floor over a window") {
  RhoFloorReport rep = rho_floor_scan(2, 1'000, 30'000, 4);
  CHECK(rep.minimum > Rational(1, 5));
  CHECK(rep.minimum <= Rational(1));
  CHECK(rep.argmin >= 1'000);
  CHECK(rep.argmin <= 30'000);
  // The reported minimum is attained.
  CHECK(rho(RhoFamily::rho1, rep.argmin, 2) == rep.minimum);
}

TEST_CASE("lemma suite is clean at small scale") {
  LemmaSuiteReport rep = lemma_suite(3'000, 3);
  CHECK(rep.ok());
  CHECK(rep.checks > 3'000);
  CHECK(rep.violations.empty());
  CHECK_THROWS_AS(lemma_suite(1, 1), std::domain_error);
}
