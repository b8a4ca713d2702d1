// Integer primitives against definition-level brute force: the sieve, the
// factorizer, divisor enumeration, the classical functions, the quadratic
// characters, checked arithmetic, and the flat divisor table.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cuspdim/arith.hpp"

using namespace cuspdim;

namespace {

// phi by the definition: count of 1 <= m <= n with gcd(m, n) = 1.
std::uint64_t phi_brute(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) ++count;
  return count;
}

// tau by the definition: count of divisors.
std::uint64_t tau_brute(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) ++count;
  return count;
}

// mu by factor stripping.
int mu_brute(std::uint64_t n) {
  int factors = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    ++factors;
    if (n % p == 0) return 0;
  }
  if (n > 1) ++factors;
  return factors % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("sieve marks primes and smallest factors") {
  SpfSieve sieve(1000);
  CHECK(sieve.limit() == 1000);
  CHECK(sieve.is_prime(2));
  CHECK(sieve.is_prime(997));
  CHECK(!sieve.is_prime(1));
  CHECK(!sieve.is_prime(999));
  CHECK(sieve.spf(999) == 3);
  CHECK(sieve.spf(997) == 997);
  CHECK(sieve.spf(100) == 2);

  // Every listed prime has itself as smallest factor; composites do not.
  std::size_t listed = 0;
  for (std::uint32_t p : sieve.primes()) {
    CHECK(sieve.spf(p) == p);
    ++listed;
  }
  CHECK(listed == 168);  // pi(1000)

  const SpfSieve& shared = SpfSieve::shared(500);
  CHECK(shared.limit() >= 500);
  CHECK(shared.is_prime(499));
}

TEST_CASE("factorization recomposes its input") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    Factorization f = factorize(n);
    CHECK(f.value() == n);
    // Sorted by prime, all exponents positive.
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f.prime_powers()[i].a >= 1);
      if (i > 0) CHECK(f.prime_powers()[i - 1].p < f.prime_powers()[i].p);
    }
  }
  CHECK(factorize(1).empty());
  CHECK(factorize(2).size() == 1);
  CHECK(factorize(720).size() == 3);  // 2^4 3^2 5
  CHECK_THROWS_AS(factorize(0), std::domain_error);

  // Beyond any sieve: a 10-digit semiprime.
  Factorization big = factorize(1000003ULL * 999983ULL);
  CHECK(big.size() == 2);
  CHECK(big.value() == 1000003ULL * 999983ULL);
}

TEST_CASE("divisors are ascending and complete") {
  for (std::uint64_t n : {1ULL, 2ULL, 12ULL, 36ULL, 97ULL, 360ULL, 1024ULL, 2310ULL}) {
    std::vector<std::uint64_t> divs = divisors(n);
    std::vector<std::uint64_t> brute;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) brute.push_back(d);
    CHECK(divs == brute);
  }
}

TEST_CASE("phi, mu, tau, omega match brute force") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    CHECK(euler_phi(n) == phi_brute(n));
    CHECK(moebius(n) == mu_brute(n));
    CHECK(divisor_count(n) == tau_brute(n));
    Factorization f = factorize(n);
    CHECK(euler_phi(f) == phi_brute(n));
    CHECK(moebius(f) == mu_brute(n));
    CHECK(divisor_count(f) == tau_brute(n));
    CHECK(distinct_prime_count(n) == f.size());
  }
}

TEST_CASE("quadratic characters of conductor 4 and 3") {
  // Period, support, multiplicativity.
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CHECK(chi_minus4(n) == chi_minus4(n + 4));
    CHECK(chi_minus3(n) == chi_minus3(n + 3));
    for (std::uint64_t m = 1; m <= 20; ++m) {
      CHECK(chi_minus4(n * m) == chi_minus4(n) * chi_minus4(m));
      CHECK(chi_minus3(n * m) == chi_minus3(n) * chi_minus3(m));
    }
  }
  CHECK(chi_minus4(1) == 1);
  CHECK(chi_minus4(2) == 0);
  CHECK(chi_minus4(3) == -1);
  CHECK(chi_minus4(5) == 1);
  CHECK(chi_minus3(1) == 1);
  CHECK(chi_minus3(2) == -1);
  CHECK(chi_minus3(3) == 0);
  CHECK(chi_minus3(7) == 1);
}

TEST_CASE("named dispatchers") {
  CHECK(arithmetic_function("phi", 12) == 4);
  CHECK(arithmetic_function("mu", 30) == -1);
  CHECK(arithmetic_function("tau", 36) == 9);
  CHECK(arithmetic_function("omega", 60) == 3);
  CHECK(arithmetic_function("delta", 1) == 1);
  CHECK(arithmetic_function("delta", 7) == 0);
  CHECK(arithmetic_function("one", 7) == 1);
  CHECK(arithmetic_function("id", 7) == 7);
  CHECK(character("chi_minus4", 13) == 1);
  CHECK(character("chi_minus3", 5) == -1);
  CHECK_THROWS_AS(arithmetic_function("sigma", 5), std::invalid_argument);
  CHECK_THROWS_AS(character("chi_minus8", 5), std::invalid_argument);
  CHECK_THROWS_AS(arithmetic_function("phi", 0), std::domain_error);
}

TEST_CASE("checked arithmetic escalates overflow") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(big - 1, 1) == big);
  CHECK(checked_mul(1LL << 31, 1LL << 31) == (1LL << 62));
  CHECK(checked_mul(-7, 6) == -42);
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_add(-big, -2), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(1LL << 32, 1LL << 32), std::overflow_error);
}

TEST_CASE("divisor table agrees with the enumerator") {
  DivisorTable table = DivisorTable::build(600);
  CHECK(table.limit() == 600);
  for (std::uint32_t n = 1; n <= 600; ++n) {
    std::vector<std::uint64_t> reference = divisors(n);
    std::span<const std::uint32_t> row = table.of(n);
    REQUIRE(row.size() == reference.size());
    for (std::size_t i = 0; i < row.size(); ++i) CHECK(row[i] == reference[i]);
  }
}
