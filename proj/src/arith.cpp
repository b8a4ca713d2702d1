#include "cuspdim/arith.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cuspdim {

SpfSieve::SpfSieve(std::uint32_t limit) : limit_(limit), spf_(std::size_t(limit) + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    primes_.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
}

const SpfSieve& SpfSieve::shared(std::uint32_t min_limit) {
  static std::mutex mu;
  static std::shared_ptr<const SpfSieve> table;
  std::lock_guard<std::mutex> lock(mu);
  if (!table || table->limit() < min_limit)
    table = std::make_shared<const SpfSieve>(std::max(min_limit, kDefaultLimit));
  // Leak one reference per rebuild so outstanding readers stay valid; the
  // table is rebuilt at most a handful of times per process.
  static std::vector<std::shared_ptr<const SpfSieve>> retired;
  if (retired.empty() || retired.back() != table) retired.push_back(table);
  return *table;
}

std::uint64_t Factorization::value() const {
  std::uint64_t n = 1;
  for (const auto& [p, a] : factors_)
    for (std::uint32_t i = 0; i < a; ++i) n *= p;
  return n;
}

Factorization factorize(std::uint64_t n, const SpfSieve& sieve) {
  if (n == 0) throw std::domain_error("factorize: n must be positive");
  std::vector<PrimePower> out;
  while (n > 1 && n <= sieve.limit()) {
    std::uint64_t p = sieve.spf(n);
    std::uint32_t a = 0;
    while (n % p == 0) n /= p, ++a;
    out.push_back({p, a});
  }
  if (n > 1) {
    // Above the sieve: strip sieve primes, then odd trial division.
    for (std::uint64_t p : sieve.primes()) {
      if (p * p > n) break;
      if (n % p) continue;
      std::uint32_t a = 0;
      while (n % p == 0) n /= p, ++a;
      out.push_back({p, a});
    }
    std::uint64_t p = std::uint64_t(sieve.limit()) + 1 + (sieve.limit() % 2);
    for (; p * p <= n; p += 2) {
      if (n % p) continue;
      std::uint32_t a = 0;
      while (n % p == 0) n /= p, ++a;
      out.push_back({p, a});
    }
    if (n > 1) out.push_back({n, 1});
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& x, const PrimePower& y) { return x.p < y.p; });
  return Factorization(std::move(out));
}

Factorization factorize(std::uint64_t n) { return factorize(n, SpfSieve::shared()); }

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  Factorization f = factorize(n);
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, a] : f.prime_powers()) {
    std::size_t base = out.size();
    std::uint64_t q = 1;
    for (std::uint32_t i = 1; i <= a; ++i) {
      q *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, a] : f.prime_powers()) {
    r *= p - 1;
    for (std::uint32_t i = 1; i < a; ++i) r *= p;
  }
  return r;
}

int moebius(const Factorization& f) {
  for (const auto& pp : f.prime_powers())
    if (pp.a >= 2) return 0;
  return f.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t divisor_count(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& pp : f.prime_powers()) r *= pp.a + 1;
  return r;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }
int moebius(std::uint64_t n) { return moebius(factorize(n)); }
std::uint64_t divisor_count(std::uint64_t n) { return divisor_count(factorize(n)); }
unsigned distinct_prime_count(std::uint64_t n) { return static_cast<unsigned>(factorize(n).size()); }

int chi_minus4(std::uint64_t n) {
  switch (n % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

int chi_minus3(std::uint64_t n) {
  switch (n % 3) {
    case 1: return 1;
    case 2: return -1;
    default: return 0;
  }
}

std::int64_t arithmetic_function(std::string_view name, std::uint64_t n) {
  if (n == 0) throw std::domain_error("arithmetic_function: n must be positive");
  if (name == "phi") return static_cast<std::int64_t>(euler_phi(n));
  if (name == "mu") return moebius(n);
  if (name == "tau") return static_cast<std::int64_t>(divisor_count(n));
  if (name == "omega") return distinct_prime_count(n);
  if (name == "delta") return n == 1 ? 1 : 0;
  if (name == "one") return 1;
  if (name == "id") return static_cast<std::int64_t>(n);
  throw std::invalid_argument("arithmetic_function: unknown name '" + std::string(name) + "'");
}

int character(std::string_view name, std::uint64_t n) {
  if (n == 0) throw std::domain_error("character: n must be positive");
  if (name == "chi_minus4") return chi_minus4(n);
  if (name == "chi_minus3") return chi_minus3(n);
  throw std::invalid_argument("character: unknown name '" + std::string(name) + "'");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 multiplication overflow");
  return r;
}

DivisorTable DivisorTable::build(std::uint32_t limit) {
  DivisorTable t;
  t.limit_ = limit;
  std::vector<std::uint32_t> tau(std::size_t(limit) + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d)
    for (std::uint64_t n = d; n <= limit; n += d) ++tau[n];
  t.offsets_.assign(std::size_t(limit) + 2, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) t.offsets_[n + 1] = t.offsets_[n] + tau[n];
  t.divs_.resize(t.offsets_[limit + 1]);
  std::vector<std::size_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
  for (std::uint64_t d = 1; d <= limit; ++d)
    for (std::uint64_t n = d; n <= limit; n += d) t.divs_[cursor[n]++] = static_cast<std::uint32_t>(d);
  return t;
}

}  // namespace cuspdim
