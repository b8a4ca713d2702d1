#pragma once

// Closed-form dimensions of the spaces of cusp forms and newforms on
// Gamma_0(N) and Gamma_1(N): the six families, the squarefree specialization,
// newform proportions, and genus.  Single evaluations run in exact rational
// arithmetic through the registry; range scans use an overflow-checked int64
// path over the same rules.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuspdim/multiplicative.hpp"
#include "cuspdim/rational.hpp"
#include "cuspdim/weights.hpp"

namespace cuspdim {

// g0      dim S_k(Gamma_0(N))            g1      dim S_k(Gamma_1(N))
// g0plus  new subspace on Gamma_0(N)     g1plus  new subspace on Gamma_1(N)
// g0star  count of newform classes at    g1star  same on Gamma_1(N)
//         levels dividing N
enum class Family { g0, g0plus, g0star, g1, g1plus, g1star };
enum class Group { gamma0, gamma1 };
enum class RhoFamily { rho0, rho1 };

Family family_from_name(std::string_view name);  // invalid_argument on unknown
std::string_view family_name(Family f);
Group family_group(Family f);
Group group_from_name(std::string_view name);
std::string_view group_name(Group g);

struct DimensionValue {
  Family family = Family::g0;
  std::uint64_t level = 0;
  int k = 0;
  BigInt value;  // nonnegative; integrality is asserted before returning
};

// N >= 1, k >= 2.  The g0 family is 0 in every odd weight; the g1 family is
// defined for all k >= 2.  A non-integral or negative formula value is an
// internal consistency error (std::logic_error), never a return.
DimensionValue dimension(Family family, std::uint64_t N, int k,
                         const Registry& reg = Registry::global());

// Squarefree-level closed form for the newform-class count: requires
// mu(N) != 0, even k, and (N, k) != (1, 2).
BigInt gekeler_squarefree(std::uint64_t N, int k, const Registry& reg = Registry::global());

// Newform proportion g+/g (rho0) or its Gamma_1 analogue (rho1), in [0, 1];
// by convention 1 when the full-space dimension is 0.
Rational rho(RhoFamily which, std::uint64_t N, int k, const Registry& reg = Registry::global());

BigInt genus(Group group, std::uint64_t N, const Registry& reg = Registry::global());

// Exact int64 dimensions over a level block, assembled from the same
// registry rules as dimension().  Values that do not fit escalate as
// std::overflow_error; integrality and nonnegativity are asserted per level.
// Instances are single-threaded; give each worker its own.
class DimensionSieve {
 public:
  DimensionSieve(Family family, int k, const Registry& reg = Registry::global());
  ~DimensionSieve();
  DimensionSieve(DimensionSieve&&) noexcept;
  DimensionSieve& operator=(DimensionSieve&&) noexcept;

  Family family() const;
  int k() const;

  // out[i] = dim(lo + i) for lo + i <= hi; out.size() >= hi - lo + 1.
  void fill(std::uint64_t lo, std::uint64_t hi, std::span<std::int64_t> out);

  std::int64_t at(std::uint64_t n);  // single level through the same path

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Divisor-sum consistency of the closed forms (newform decomposition of the
// full space, and the inversions): for each weight checks
//   g = sum_{d|N} tau(N/d) g+(d),  g* = sum_{d|N} g+(d),
//   g+ = sum_{d|N} lambda(N/d) g(d)
// pointwise for N <= limit.
std::vector<IdentityReport> dimension_convolution_suite(Group group, std::uint32_t limit,
                                                        std::span<const int> weights,
                                                        const Registry& reg = Registry::global());

}  // namespace cuspdim
