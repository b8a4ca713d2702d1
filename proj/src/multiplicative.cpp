#include "cuspdim/multiplicative.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace cuspdim {

namespace {

BigInt ipow(std::uint64_t p, std::uint32_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

// p^e for possibly negative e.
Rational ppow(std::uint64_t p, int e) {
  if (e >= 0) return Rational(ipow(p, static_cast<std::uint32_t>(e)));
  return Rational(BigInt(1), ipow(p, static_cast<std::uint32_t>(-e)));
}

}  // namespace

struct MultiplicativeFunction::Cache {
  mutable std::shared_mutex mu;
  mutable std::unordered_map<std::uint64_t, Rational> values;
};

MultiplicativeFunction::MultiplicativeFunction(std::string name, Rule rule)
    : name_(std::move(name)), rule_(std::move(rule)), cache_(std::make_shared<Cache>()) {}

Rational MultiplicativeFunction::at_prime_power(std::uint64_t p, std::uint32_t a) const {
  if (a == 0) return Rational(1);
  if (p >= (std::uint64_t(1) << 55) || a > 255) return rule_(p, a);  // out of key range; rare
  std::uint64_t key = (p << 8) | a;
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  Rational v = rule_(p, a);
  std::unique_lock lock(cache_->mu);
  return cache_->values.emplace(key, std::move(v)).first->second;
}

Rational MultiplicativeFunction::eval(const Factorization& f) const {
  Rational r(1);
  for (const auto& [p, a] : f.prime_powers()) r *= at_prime_power(p, a);
  return r;
}

MultiplicativeFunction convolve(const MultiplicativeFunction& f, const MultiplicativeFunction& g) {
  std::string name = f.name() + "*" + g.name();
  return MultiplicativeFunction(name, [f, g](std::uint64_t p, std::uint32_t a) {
    Rational s(0);
    for (std::uint32_t b = 0; b <= a; ++b) s += f.at_prime_power(p, b) * g.at_prime_power(p, a - b);
    return s;
  });
}

namespace {

using Rule = MultiplicativeFunction::Rule;

// rule' (p, a) = p^{scale*a} rule(p, a); lifts s0 -> N s0(N), s1 -> N^2 s1(N).
Rule scaled(Rule base, std::uint32_t scale) {
  return [base = std::move(base), scale](std::uint64_t p, std::uint32_t a) {
    return Rational(ipow(p, a * scale)) * base(p, a);
  };
}

Rational rule_s0(std::uint64_t p, std::uint32_t) { return Rational(BigInt(p) + 1, BigInt(p)); }

Rational rule_s0_plus(std::uint64_t p, std::uint32_t a) {
  BigInt P(p);
  if (a == 1) return Rational(P - 1, P);
  if (a == 2) return Rational(P * P - P - 1, P * P);
  return Rational(P - 1, P) * Rational(P * P - 1, P * P);
}

Rational rule_s0_star(std::uint64_t p, std::uint32_t a) {
  BigInt P(p);
  if (a == 1) return Rational(1);
  return Rational(P * P - 1, P * P);
}

Rational rule_nu_inf(std::uint64_t p, std::uint32_t a) {
  if (a % 2 == 1) return Rational(2) * ppow(p, static_cast<int>((a - 1) / 2));
  return ppow(p, static_cast<int>(a / 2)) + ppow(p, static_cast<int>(a / 2) - 1);
}

Rational rule_nu_inf_plus(std::uint64_t p, std::uint32_t a) {
  if (a % 2 == 1) return Rational(0);
  BigInt P(p);
  if (a == 2) return Rational(P - 2);
  return ppow(p, static_cast<int>(a / 2) - 2) * Rational((P - 1) * (P - 1));
}

Rational rule_nu_inf_star(std::uint64_t p, std::uint32_t a) {
  if (a == 1) return Rational(1);
  return ppow(p, static_cast<int>(a / 2) - 1) * Rational(BigInt(p) - 1);
}

Rational rule_nu2(std::uint64_t p, std::uint32_t a) {
  if (p == 2) return Rational(a == 1 ? 1 : 0);
  return Rational(p % 4 == 1 ? 2 : 0);
}

Rational rule_nu2_plus(std::uint64_t p, std::uint32_t a) {
  if (p == 2) {
    if (a == 1 || a == 2) return Rational(-1);
    return Rational(a == 3 ? 1 : 0);
  }
  if (a >= 3) return Rational(0);
  if (p % 4 == 1) return Rational(a == 1 ? 0 : -1);
  return Rational(a == 1 ? -2 : 1);
}

Rational rule_nu2_star(std::uint64_t p, std::uint32_t a) {
  if (p == 2) return Rational(a == 2 ? -1 : 0);
  if (a >= 2) return Rational(0);
  return Rational(chi_minus4(p));
}

Rational rule_nu3(std::uint64_t p, std::uint32_t a) {
  if (p == 3) return Rational(a == 1 ? 1 : 0);
  return Rational(p % 3 == 1 ? 2 : 0);
}

Rational rule_nu3_plus(std::uint64_t p, std::uint32_t a) {
  if (p == 3) {
    if (a == 1 || a == 2) return Rational(-1);
    return Rational(a == 3 ? 1 : 0);
  }
  if (a >= 3) return Rational(0);
  if (p % 3 == 1) return Rational(a == 1 ? 0 : -1);
  return Rational(a == 1 ? -2 : 1);
}

Rational rule_nu3_star(std::uint64_t p, std::uint32_t a) {
  if (p == 3) return Rational(a == 2 ? -1 : 0);
  if (a >= 2) return Rational(0);
  return Rational(chi_minus3(p));
}

Rational rule_s1(std::uint64_t p, std::uint32_t) {
  BigInt P(p);
  return Rational(P * P - 1, P * P);
}

Rational rule_s1_plus(std::uint64_t p, std::uint32_t a) {
  BigInt P2 = BigInt(p) * p;
  if (a == 1) return Rational(P2 - 3, P2);
  if (a == 2) return Rational(P2 * P2 - 3 * P2 + 3, P2 * P2);
  Rational t = rule_s1(p, a);
  return t * t * t;
}

Rational rule_s1_star(std::uint64_t p, std::uint32_t a) {
  BigInt P2 = BigInt(p) * p;
  if (a == 1) return Rational(P2 - 2, P2);
  Rational t = rule_s1(p, a);
  return t * t;
}

Rational rule_u(std::uint64_t p, std::uint32_t a) {
  BigInt P(p);
  return ppow(p, static_cast<int>(a) - 2) * Rational((P - 1) * ((a + 1) * P - a + 1));
}

Rational rule_u_plus(std::uint64_t p, std::uint32_t a) {
  BigInt P(p);
  if (a == 1) return Rational(2 * P - 4);
  if (a == 2) return Rational(3 * P * P - 8 * P + 6);
  return ppow(p, static_cast<int>(a) - 4) * Rational((P - 1) * (P - 1) * (P - 1) * ((a + 1) * P - a + 3));
}

// u_star(p) = 2p - 3 = u(p) - 1, the value forced by u_star = u * mu (the
// same inversion the a >= 2 branch satisfies).
Rational rule_u_star(std::uint64_t p, std::uint32_t a) {
  BigInt P(p);
  if (a == 1) return Rational(2 * P - 3);
  return ppow(p, static_cast<int>(a) - 3) * Rational((P - 1) * (P - 1) * ((a + 1) * P - a + 2));
}

}  // namespace

const Registry& Registry::global() {
  static const Registry reg = [] {
    Registry r;
    auto add = [&r](const char* name, Rule rule) {
      r.fns_.emplace(name, MultiplicativeFunction(name, std::move(rule)));
    };
    add("one", [](std::uint64_t, std::uint32_t) { return Rational(1); });
    add("id", [](std::uint64_t p, std::uint32_t a) { return Rational(ipow(p, a)); });
    add("delta", [](std::uint64_t, std::uint32_t) { return Rational(0); });
    add("mu", [](std::uint64_t, std::uint32_t a) { return Rational(a == 1 ? -1 : 0); });
    add("tau", [](std::uint64_t, std::uint32_t a) { return Rational(a + 1); });
    add("phi", [](std::uint64_t p, std::uint32_t a) { return Rational(ipow(p, a) - ipow(p, a - 1)); });
    add("lambda", [](std::uint64_t, std::uint32_t a) { return Rational(a == 1 ? -2 : a == 2 ? 1 : 0); });

    add("s0", rule_s0);
    add("s0_plus", rule_s0_plus);
    add("s0_star", rule_s0_star);
    add("n_s0", scaled(rule_s0, 1));
    add("n_s0_plus", scaled(rule_s0_plus, 1));
    add("n_s0_star", scaled(rule_s0_star, 1));

    add("nu_inf", rule_nu_inf);
    add("nu_inf_plus", rule_nu_inf_plus);
    add("nu_inf_star", rule_nu_inf_star);
    add("nu2", rule_nu2);
    add("nu2_plus", rule_nu2_plus);
    add("nu2_star", rule_nu2_star);
    add("nu3", rule_nu3);
    add("nu3_plus", rule_nu3_plus);
    add("nu3_star", rule_nu3_star);

    add("s1", rule_s1);
    add("s1_plus", rule_s1_plus);
    add("s1_star", rule_s1_star);
    add("n2_s1", scaled(rule_s1, 2));
    add("n2_s1_plus", scaled(rule_s1_plus, 2));
    add("n2_s1_star", scaled(rule_s1_star, 2));

    add("u", rule_u);
    add("u_plus", rule_u_plus);
    add("u_star", rule_u_star);
    return r;
  }();
  return reg;
}

const MultiplicativeFunction& Registry::at(std::string_view name) const {
  auto it = fns_.find(name);
  if (it == fns_.end()) throw std::invalid_argument("registry: unknown function '" + std::string(name) + "'");
  return it->second;
}

bool Registry::contains(std::string_view name) const { return fns_.find(name) != fns_.end(); }

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  out.reserve(fns_.size());
  for (const auto& [k, v] : fns_) out.push_back(k);
  return out;
}

Registry Registry::with_override(const MultiplicativeFunction& f) const {
  Registry r = *this;
  r.fns_.erase(f.name());
  r.fns_.emplace(f.name(), f);
  return r;
}

std::vector<Rational> sieve_batch_eval(const MultiplicativeFunction& f, std::uint64_t x) {
  constexpr std::uint64_t kMaxBatch = 20'000'000;  // ~2 GB of rationals
  if (x > kMaxBatch) throw std::length_error("sieve_batch_eval: range exceeds the memory budget");
  const SpfSieve& sieve = SpfSieve::shared(static_cast<std::uint32_t>(std::max<std::uint64_t>(x, 2)));
  std::vector<Rational> out(x + 1, Rational(1));
  if (x == 0) return out;
  out[0] = Rational(0);
  for (std::uint64_t n = 2; n <= x; ++n) {
    std::uint64_t p = sieve.spf(n), m = n;
    std::uint32_t a = 0;
    while (m % p == 0) m /= p, ++a;
    out[n] = m == 1 ? f.at_prime_power(p, a) : out[m] * f.at_prime_power(p, a);
  }
  return out;
}

SummatoryReport summatory(const MultiplicativeFunction& f, std::uint64_t x, unsigned beta) {
  std::vector<Rational> vals = sieve_batch_eval(f, x);
  Rational sum(0);
  for (std::uint64_t n = 1; n <= x; ++n) {
    Rational term = vals[n];
    for (unsigned b = 0; b < beta; ++b) term *= Rational(BigInt(n));
    sum += term;
  }
  return SummatoryReport{f.name(), x, beta, std::move(sum)};
}

IdentityReport check_convolution_identity(const MultiplicativeFunction& f,
                                          const MultiplicativeFunction& g,
                                          const MultiplicativeFunction& target,
                                          std::uint64_t limit) {
  IdentityReport rep{f.name() + "*" + g.name() + " = " + target.name(), limit, 0, true};
  std::vector<Rational> fv = sieve_batch_eval(f, limit);
  std::vector<Rational> gv = sieve_batch_eval(g, limit);
  std::vector<Rational> tv = sieve_batch_eval(target, limit);
  std::vector<Rational> conv(limit + 1, Rational(0));
  for (std::uint64_t d = 1; d <= limit; ++d)
    for (std::uint64_t m = 1; d * m <= limit; ++m) conv[d * m] += fv[d] * gv[m];
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (conv[n] != tv[n]) {
      rep.first_failure = n;
      rep.ok = false;
      break;
    }
  }
  return rep;
}

std::vector<IdentityReport> convolution_identity_suite(std::uint64_t limit, const Registry& reg) {
  static constexpr const char* kTriples[][3] = {
      {"n_s0", "lambda", "n_s0_plus"},  {"nu_inf", "lambda", "nu_inf_plus"},
      {"nu2", "lambda", "nu2_plus"},    {"nu3", "lambda", "nu3_plus"},
      {"u", "lambda", "u_plus"},        {"n2_s1", "lambda", "n2_s1_plus"},
      {"n_s0", "mu", "n_s0_star"},      {"nu_inf", "mu", "nu_inf_star"},
      {"nu2", "mu", "nu2_star"},        {"nu3", "mu", "nu3_star"},
      {"u", "mu", "u_star"},            {"n2_s1", "mu", "n2_s1_star"},
  };
  std::vector<IdentityReport> out;
  for (const auto& t : kTriples)
    out.push_back(check_convolution_identity(reg.at(t[0]), reg.at(t[1]), reg.at(t[2]), limit));
  return out;
}

}  // namespace cuspdim
