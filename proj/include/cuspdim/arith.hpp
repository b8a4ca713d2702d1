#pragma once

// Exact integer primitives: smallest-prime-factor sieve, factorization,
// divisor enumeration, the classical arithmetic functions, and the
// quadratic characters of conductor 4 and 3.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cuspdim {

struct PrimePower {
  std::uint64_t p;
  std::uint32_t a;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Smallest-prime-factor table for [2, limit].  Immutable once built; safe to
// share across threads.
class SpfSieve {
 public:
  static constexpr std::uint32_t kDefaultLimit = 10'000'000;

  explicit SpfSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && n <= limit_ && spf_[n] == n; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  // Process-wide table covering at least [2, min_limit]; rebuilt (larger)
  // on demand and never shrunk.
  static const SpfSieve& shared(std::uint32_t min_limit = kDefaultLimit);

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

// Prime-power decomposition, factors sorted by prime.  1 factors as the
// empty product.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {}

  const std::vector<PrimePower>& prime_powers() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  std::uint64_t value() const;  // recomposed product

 private:
  std::vector<PrimePower> factors_;
};

// Trial division, driven by the shared sieve below its limit.  n == 0 is a
// domain error.
Factorization factorize(std::uint64_t n);
Factorization factorize(std::uint64_t n, const SpfSieve& sieve);

std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);
unsigned distinct_prime_count(std::uint64_t n);

std::uint64_t euler_phi(const Factorization& f);
int moebius(const Factorization& f);
std::uint64_t divisor_count(const Factorization& f);

// chi_{-4}: period 4, completely multiplicative; 0 on even n, +1 for
// n = 1 (mod 4), -1 for n = 3 (mod 4).  chi_{-3} is the analogue mod 3.
int chi_minus4(std::uint64_t n);
int chi_minus3(std::uint64_t n);

// Name-keyed dispatchers backing the CLI: names "phi", "mu", "tau",
// "omega", "delta", "one", "id" and characters "chi_minus4", "chi_minus3".
// Unknown names are usage errors (std::invalid_argument); n == 0 is a
// domain error.
std::int64_t arithmetic_function(std::string_view name, std::uint64_t n);
int character(std::string_view name, std::uint64_t n);

// Overflow-checked int64 arithmetic: throws std::overflow_error instead of
// wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Divisor lists for every n <= limit in one flat CSR layout.
class DivisorTable {
 public:
  static DivisorTable build(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  std::span<const std::uint32_t> of(std::uint32_t n) const {
    return {divs_.data() + offsets_[n], offsets_[n + 1] - offsets_[n]};
  }

 private:
  std::uint32_t limit_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> divs_;
};

}  // namespace cuspdim
