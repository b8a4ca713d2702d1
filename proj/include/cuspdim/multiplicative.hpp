#pragma once

// Multiplicative functions defined by prime-power rules: evaluation,
// Dirichlet convolution, the named registry behind the dimension formulas,
// exact batch evaluation over a level range, and exact summatory values.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuspdim/arith.hpp"
#include "cuspdim/rational.hpp"

namespace cuspdim {

// f(p^a) given by rule(p, a) for a >= 1; f(1) = 1; f(mn) = f(m)f(n) for
// coprime m, n.  Prime-power values are memoized behind a shared lock, so
// copies share one cache and unrestricted concurrent use is safe.
class MultiplicativeFunction {
 public:
  using Rule = std::function<Rational(std::uint64_t p, std::uint32_t a)>;

  MultiplicativeFunction(std::string name, Rule rule);

  const std::string& name() const { return name_; }

  Rational at_prime_power(std::uint64_t p, std::uint32_t a) const;
  Rational eval(const Factorization& f) const;
  Rational eval(std::uint64_t n) const { return eval(factorize(n)); }

 private:
  struct Cache;
  std::string name_;
  Rule rule_;
  std::shared_ptr<Cache> cache_;
};

// Dirichlet convolution: (f*g)(p^a) = sum_{b=0..a} f(p^b) g(p^{a-b}).
MultiplicativeFunction convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g);

// The named rule set used by the dimension formulas.  Registered names:
//   one id delta mu tau phi lambda
//   s0 s0_plus s0_star        n_s0 n_s0_plus n_s0_star
//   nu_inf nu_inf_plus nu_inf_star
//   nu2 nu2_plus nu2_star     nu3 nu3_plus nu3_star
//   s1 s1_plus s1_star        n2_s1 n2_s1_plus n2_s1_star
//   u u_plus u_star
// The n_/n2_ entries are the integer-valued scalings p^a s(p^a) and
// p^{2a} s(p^a).
class Registry {
 public:
  static const Registry& global();

  const MultiplicativeFunction& at(std::string_view name) const;  // invalid_argument on unknown
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

  // Copy with one rule replaced; for fault-injection tests.
  Registry with_override(const MultiplicativeFunction& f) const;

 private:
  Registry() = default;
  std::map<std::string, MultiplicativeFunction, std::less<>> fns_;
};

// Exact values f(1..x) assembled in one pass over the shared
// smallest-prime-factor sieve; out[n] == eval(f, n).  Index 0 is unused.
// x beyond the memory budget (~2 GB of rationals) is a resource error.
std::vector<Rational> sieve_batch_eval(const MultiplicativeFunction& f, std::uint64_t x);

struct SummatoryReport {
  std::string function_name;
  std::uint64_t limit = 0;
  unsigned beta = 0;
  Rational sum;  // sum_{n <= limit} n^beta f(n), exact
};

SummatoryReport summatory(const MultiplicativeFunction& f, std::uint64_t x, unsigned beta = 0);

// One pointwise identity check over n <= limit: convolve-by-n-level
// divisor sums of (f, g) against target.  first_failure == 0 when clean.
struct IdentityReport {
  std::string name;
  std::uint64_t limit = 0;
  std::uint64_t first_failure = 0;
  bool ok = true;
};

IdentityReport check_convolution_identity(const MultiplicativeFunction& f,
                                          const MultiplicativeFunction& g,
                                          const MultiplicativeFunction& target,
                                          std::uint64_t limit);

// The twelve lambda/mu transfer identities tying the full-space rule set to
// the newform and star rule sets (n_s0*lambda = n_s0_plus, ..., u*mu = u_star).
std::vector<IdentityReport> convolution_identity_suite(std::uint64_t limit,
                                                       const Registry& reg = Registry::global());

}  // namespace cuspdim
