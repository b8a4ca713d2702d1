#include "cuspdim/dimensions.hpp"

#include <array>
#include <stdexcept>
#include <unordered_map>

namespace cuspdim {

Family family_from_name(std::string_view name) {
  if (name == "g0") return Family::g0;
  if (name == "g0plus") return Family::g0plus;
  if (name == "g0star") return Family::g0star;
  if (name == "g1") return Family::g1;
  if (name == "g1plus") return Family::g1plus;
  if (name == "g1star") return Family::g1star;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::g0: return "g0";
    case Family::g0plus: return "g0plus";
    case Family::g0star: return "g0star";
    case Family::g1: return "g1";
    case Family::g1plus: return "g1plus";
    case Family::g1star: return "g1star";
  }
  throw std::logic_error("bad family");
}

Group family_group(Family f) {
  switch (f) {
    case Family::g0:
    case Family::g0plus:
    case Family::g0star: return Group::gamma0;
    default: return Group::gamma1;
  }
}

Group group_from_name(std::string_view name) {
  if (name == "gamma0") return Group::gamma0;
  if (name == "gamma1") return Group::gamma1;
  throw std::invalid_argument("unknown group '" + std::string(name) + "'");
}

std::string_view group_name(Group g) { return g == Group::gamma0 ? "gamma0" : "gamma1"; }

namespace {

void check_args(std::uint64_t N, int k) {
  if (N == 0) throw std::domain_error("dimension: level must be positive");
  if (k < 2) throw std::domain_error("dimension: weight must be >= 2");
}

// The order-four correction sum_{i | N, i <= 4} coeff(i) * aux(N / i), with
// aux = delta, lambda, or mu according to the family.
Rational small_divisor_correction(std::uint64_t N, const WeightCoefficients& w,
                                  const MultiplicativeFunction* aux) {
  const Rational* b[5] = {nullptr, &w.b1, &w.b2, &w.b3, &w.b4};
  Rational sum(0);
  for (std::uint64_t i = 1; i <= 4 && i <= N; ++i) {
    if (N % i != 0) continue;
    Rational a = aux ? aux->eval(N / i) : Rational(N / i == 1 ? 1 : 0);
    if (!a.is_zero()) sum += *b[i] * a;
  }
  return sum;
}

}  // namespace

DimensionValue dimension(Family family, std::uint64_t N, int k, const Registry& reg) {
  check_args(N, k);
  const Group grp = family_group(family);
  Rational val(0);
  if (grp == Group::gamma0 && k % 2 == 1) {
    return DimensionValue{family, N, k, BigInt(0)};
  }
  const WeightCoefficients w = weight_coeffs(k);
  const Factorization f = factorize(N);
  const bool dk = k == 2;
  auto ev = [&](const char* name) { return reg.at(name).eval(f); };

  if (grp == Group::gamma0) {
    const char* s;
    const char* ni;
    const char* n2;
    const char* n3;
    Rational delta_term(0);
    switch (family) {
      case Family::g0:
        s = "n_s0", ni = "nu_inf", n2 = "nu2", n3 = "nu3";
        delta_term = Rational(dk ? 1 : 0);
        break;
      case Family::g0plus:
        s = "n_s0_plus", ni = "nu_inf_plus", n2 = "nu2_plus", n3 = "nu3_plus";
        delta_term = dk ? Rational(moebius(f)) : Rational(0);
        break;
      default:
        s = "n_s0_star", ni = "nu_inf_star", n2 = "nu2_star", n3 = "nu3_star";
        delta_term = Rational(dk && N == 1 ? 1 : 0);
        break;
    }
    val = Rational(k - 1, 12) * ev(s) - Rational(1, 2) * ev(ni) + w.c2 * ev(n2) +
          w.c3 * ev(n3) + delta_term;
  } else {
    switch (family) {
      case Family::g1:
        val = Rational(k - 1, 24) * ev("n2_s1") - Rational(1, 4) * ev("u") +
              Rational(dk ? 1 : 0) + small_divisor_correction(N, w, nullptr);
        break;
      case Family::g1plus:
        val = Rational(k - 1, 24) * ev("n2_s1_plus") - Rational(1, 4) * ev("u_plus") +
              (dk ? Rational(moebius(f)) : Rational(0)) +
              small_divisor_correction(N, w, &reg.at("lambda"));
        break;
      default:
        val = Rational(k - 1, 24) * ev("n2_s1_star") - Rational(1, 4) * ev("u_star") +
              Rational(dk && N == 1 ? 1 : 0) + small_divisor_correction(N, w, &reg.at("mu"));
        break;
    }
  }

  if (!val.is_integer())
    throw std::logic_error("dimension: non-integral value " + val.to_string() + " at " +
                           std::string(family_name(family)) + "(" + std::to_string(N) + ", " +
                           std::to_string(k) + ")");
  BigInt v = val.as_integer();
  if (v < 0)
    throw std::logic_error("dimension: negative value at " + std::string(family_name(family)) +
                           "(" + std::to_string(N) + ", " + std::to_string(k) + ")");
  return DimensionValue{family, N, k, std::move(v)};
}

BigInt gekeler_squarefree(std::uint64_t N, int k, const Registry& reg) {
  check_args(N, k);
  if (k % 2 != 0) throw std::domain_error("gekeler_squarefree: weight must be even");
  if (moebius(N) == 0) throw std::domain_error("gekeler_squarefree: level must be squarefree");
  if (N == 1 && k == 2) throw std::domain_error("gekeler_squarefree: (N, k) = (1, 2) excluded");
  const WeightCoefficients w = weight_coeffs(k);
  Rational val = Rational(k - 1, 12) * Rational(BigInt(N)) - Rational(1, 2) +
                 w.c2 * Rational(chi_minus4(N)) + w.c3 * Rational(chi_minus3(N)) +
                 Rational(k == 2 && N == 1 ? 1 : 0);
  (void)reg;
  if (!val.is_integer())
    throw std::logic_error("gekeler_squarefree: non-integral value at N=" + std::to_string(N));
  return val.as_integer();
}

Rational rho(RhoFamily which, std::uint64_t N, int k, const Registry& reg) {
  const bool zero = which == RhoFamily::rho0;
  BigInt den = dimension(zero ? Family::g0 : Family::g1, N, k, reg).value;
  if (den == 0) return Rational(1);
  BigInt num = dimension(zero ? Family::g0plus : Family::g1plus, N, k, reg).value;
  Rational r(num, den);
  if (r.sign() < 0 || r > Rational(1))
    throw std::logic_error("rho: value outside [0, 1] at N=" + std::to_string(N));
  return r;
}

BigInt genus(Group group, std::uint64_t N, const Registry& reg) {
  return dimension(group == Group::gamma0 ? Family::g0 : Family::g1, N, 2, reg).value;
}

// ---------------------------------------------------------------------------
// Block scan path
// ---------------------------------------------------------------------------

namespace {

// Integer view of one registry rule with a per-instance (p, a) memo.
struct FnView {
  const MultiplicativeFunction* fn = nullptr;
  std::unordered_map<std::uint64_t, std::int64_t> memo;

  std::int64_t at(std::uint64_t p, std::uint32_t a) {
    std::uint64_t key = (p << 8) | a;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rational v = fn->at_prime_power(p, a);
    if (!v.is_integer())
      throw std::logic_error("scan: rule " + fn->name() + " is not integer-valued");
    BigInt n = v.as_integer();
    if (!n.fits_slong_p()) throw std::overflow_error("scan: rule value exceeds int64");
    std::int64_t r = n.get_si();
    memo.emplace(key, r);
    return r;
  }

  // f(m) by factor walk through the shared sieve.
  std::int64_t eval(std::uint64_t m, const SpfSieve& sieve) {
    std::int64_t r = 1;
    while (m > 1) {
      std::uint64_t p = sieve.spf(m);
      std::uint32_t a = 0;
      while (m % p == 0) m /= p, ++a;
      r = checked_mul(r, at(p, a));
    }
    return r;
  }
};

}  // namespace

struct DimensionSieve::Impl {
  Family family;
  int k;
  ScaledWeights w;
  bool odd_zero;  // g0 family in odd weight: identically zero
  int denom;      // 12 for the g0 family, 24 for the g1 family
  std::array<FnView, 4> parts;
  std::size_t nparts;
  FnView mu_view, lambda_view;

  Impl(Family family_, int k_, const Registry& reg)
      : family(family_), k(k_), w(scaled_weights(k_)) {
    const Group grp = family_group(family);
    odd_zero = grp == Group::gamma0 && k % 2 == 1;
    denom = grp == Group::gamma0 ? 12 : 24;
    auto set = [&](std::size_t i, const char* name) { parts[i].fn = &reg.at(name); };
    switch (family) {
      case Family::g0:
        set(0, "n_s0"), set(1, "nu_inf"), set(2, "nu2"), set(3, "nu3");
        nparts = 4;
        break;
      case Family::g0plus:
        set(0, "n_s0_plus"), set(1, "nu_inf_plus"), set(2, "nu2_plus"), set(3, "nu3_plus");
        nparts = 4;
        break;
      case Family::g0star:
        set(0, "n_s0_star"), set(1, "nu_inf_star"), set(2, "nu2_star"), set(3, "nu3_star");
        nparts = 4;
        break;
      case Family::g1:
        set(0, "n2_s1"), set(1, "u");
        nparts = 2;
        break;
      case Family::g1plus:
        set(0, "n2_s1_plus"), set(1, "u_plus");
        nparts = 2;
        break;
      default:
        set(0, "n2_s1_star"), set(1, "u_star");
        nparts = 2;
        break;
    }
    mu_view.fn = &reg.at("mu");
    lambda_view.fn = &reg.at("lambda");
  }

  std::int64_t value(std::uint64_t n, const SpfSieve& sieve) {
    if (odd_zero) return 0;

    std::int64_t acc[4] = {1, 1, 1, 1};
    int mu_n = 1;  // Moebius value collected during the same walk
    {
      std::uint64_t m = n;
      while (m > 1) {
        std::uint64_t p = sieve.spf(m);
        std::uint32_t a = 0;
        while (m % p == 0) m /= p, ++a;
        for (std::size_t i = 0; i < nparts; ++i) acc[i] = checked_mul(acc[i], parts[i].at(p, a));
        mu_n = a >= 2 ? 0 : -mu_n;
      }
    }

    // All terms scaled by denom so every coefficient is integral.
    std::int64_t total;
    if (denom == 12) {
      total = checked_mul(k - 1, acc[0]);
      total = checked_add(total, checked_mul(-6, acc[1]));
      total = checked_add(total, checked_mul(w.c2_x12, acc[2]));
      total = checked_add(total, checked_mul(w.c3_x12, acc[3]));
      if (w.delta_k) {
        if (family == Family::g0) total += 12;
        else if (family == Family::g0plus) total += 12 * mu_n;
        else if (n == 1) total += 12;
      }
    } else {
      total = checked_mul(k - 1, acc[0]);
      total = checked_add(total, checked_mul(-6, acc[1]));
      if (w.delta_k) {
        if (family == Family::g1) total += 24;
        else if (family == Family::g1plus) total += 24 * mu_n;
        else if (n == 1) total += 24;
      }
      for (std::uint64_t i = 1; i <= 4 && i <= n; ++i) {
        if (n % i != 0 || w.b_x24[i] == 0) continue;
        std::int64_t aux;
        if (family == Family::g1) aux = n == i ? 1 : 0;
        else if (family == Family::g1plus) aux = lambda_view.eval(n / i, sieve);
        else aux = mu_view.eval(n / i, sieve);
        if (aux != 0) total = checked_add(total, checked_mul(w.b_x24[i], aux));
      }
    }

    if (total % denom != 0)
      throw std::logic_error("scan: non-integral dimension at " +
                             std::string(family_name(family)) + "(" + std::to_string(n) + ", " +
                             std::to_string(k) + ")");
    std::int64_t q = total / denom;
    if (q < 0)
      throw std::logic_error("scan: negative dimension at " + std::string(family_name(family)) +
                             "(" + std::to_string(n) + ", " + std::to_string(k) + ")");
    return q;
  }
};

DimensionSieve::DimensionSieve(Family family, int k, const Registry& reg)
    : impl_(std::make_unique<Impl>(family, k, reg)) {
  if (k < 2) throw std::domain_error("dimension sieve: weight must be >= 2");
}

DimensionSieve::~DimensionSieve() = default;
DimensionSieve::DimensionSieve(DimensionSieve&&) noexcept = default;
DimensionSieve& DimensionSieve::operator=(DimensionSieve&&) noexcept = default;

Family DimensionSieve::family() const { return impl_->family; }
int DimensionSieve::k() const { return impl_->k; }

void DimensionSieve::fill(std::uint64_t lo, std::uint64_t hi, std::span<std::int64_t> out) {
  if (lo == 0 || hi < lo) throw std::domain_error("dimension sieve: bad block range");
  if (out.size() < hi - lo + 1) throw std::domain_error("dimension sieve: output too small");
  const SpfSieve& sieve = SpfSieve::shared(static_cast<std::uint32_t>(hi));
  for (std::uint64_t n = lo; n <= hi; ++n) out[n - lo] = impl_->value(n, sieve);
}

std::int64_t DimensionSieve::at(std::uint64_t n) {
  if (n == 0) throw std::domain_error("dimension sieve: level must be positive");
  return impl_->value(n, SpfSieve::shared(static_cast<std::uint32_t>(n)));
}

std::vector<IdentityReport> dimension_convolution_suite(Group group, std::uint32_t limit,
                                                        std::span<const int> weights,
                                                        const Registry& reg) {
  std::vector<IdentityReport> out;
  const DivisorTable divs = DivisorTable::build(limit);
  const SpfSieve& sieve = SpfSieve::shared(limit);

  FnView lambda_view;
  lambda_view.fn = &reg.at("lambda");
  std::vector<std::int64_t> lambda(std::size_t(limit) + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) lambda[n] = lambda_view.eval(n, sieve);

  for (int k : weights) {
    const Family fam_full = group == Group::gamma0 ? Family::g0 : Family::g1;
    const Family fam_plus = group == Group::gamma0 ? Family::g0plus : Family::g1plus;
    const Family fam_star = group == Group::gamma0 ? Family::g0star : Family::g1star;
    std::vector<std::int64_t> g(limit + 1), gp(limit + 1), gs(limit + 1);
    DimensionSieve(fam_full, k, reg).fill(1, limit, std::span(g).subspan(1));
    DimensionSieve(fam_plus, k, reg).fill(1, limit, std::span(gp).subspan(1));
    DimensionSieve(fam_star, k, reg).fill(1, limit, std::span(gs).subspan(1));

    std::string tag = std::string(group_name(group)) + " k=" + std::to_string(k) + ": ";
    IdentityReport full{tag + "g = tau*g+", limit, 0, true};
    IdentityReport star{tag + "g* = one*g+", limit, 0, true};
    IdentityReport plus{tag + "g+ = lambda*g", limit, 0, true};
    for (std::uint32_t n = 1; n <= limit; ++n) {
      std::int64_t sum_full = 0, sum_star = 0, sum_plus = 0;
      for (std::uint32_t d : divs.of(n)) {
        sum_full += static_cast<std::int64_t>(divs.of(n / d).size()) * gp[d];  // tau(n/d) g+(d)
        sum_star += gp[d];
        sum_plus += lambda[n / d] * g[d];
      }
      if (full.ok && sum_full != g[n]) full.ok = false, full.first_failure = n;
      if (star.ok && sum_star != gs[n]) star.ok = false, star.first_failure = n;
      if (plus.ok && sum_plus != gp[n]) plus.ok = false, plus.first_failure = n;
    }
    out.push_back(std::move(full));
    out.push_back(std::move(star));
    out.push_back(std::move(plus));
  }
  return out;
}

}  // namespace cuspdim
