#pragma once

// Recursive cross-check oracle for the newform closed forms.  The recursion
//   g+(N,k) = g(N,k) - sum_{d|N, d<N} tau(N/d) g+(d,k)
// and the star sum g*(N,k) = sum_{d|N} g+(d,k) are computed from the
// full-space dimensions and tau alone -- deliberately sharing no code with
// the plus/star closed forms they validate.

#include <cstdint>
#include <span>
#include <vector>

#include "cuspdim/dimensions.hpp"

namespace cuspdim {

class OracleTable {
 public:
  // Fills levels 1..limit in increasing order.  A negative recursion value
  // is a hard internal error.
  static OracleTable build(Group group, int k, std::uint32_t limit,
                           const Registry& reg = Registry::global());

  Group group() const { return group_; }
  int k() const { return k_; }
  std::uint32_t limit() const { return limit_; }

  std::int64_t full_dim(std::uint32_t level) const { return g_full_.at(level); }
  std::int64_t newform_dim(std::uint32_t level) const { return g_plus_.at(level); }
  std::int64_t star_dim(std::uint32_t level) const { return g_star_.at(level); }

 private:
  Group group_ = Group::gamma0;
  int k_ = 0;
  std::uint32_t limit_ = 0;
  std::vector<std::int64_t> g_full_, g_plus_, g_star_;  // index by level; [0] unused
};

// On-demand variant used to show the table is independent of request order:
// resolves one level, recursing through its divisors first.
class LazyOracle {
 public:
  LazyOracle(Group group, int k, const Registry& reg = Registry::global());
  std::int64_t newform_dim(std::uint32_t level);
  std::int64_t star_dim(std::uint32_t level);

 private:
  Group group_;
  int k_;
  const Registry& reg_;
  std::vector<std::int64_t> memo_;
  std::vector<bool> known_;
};

struct Mismatch {
  Group group = Group::gamma0;
  std::uint32_t level = 0;
  int k = 0;
  char kind = '+';  // '+': newform closed form, '*': star closed form, '<': ordering g+ <= g* <= g
  std::int64_t closed_form = 0;
  std::int64_t oracle = 0;
};

struct ConsistencyReport {
  Group group = Group::gamma0;
  std::uint32_t limit = 0;
  std::vector<int> weights;
  std::uint64_t checked = 0;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Closed forms vs. oracle for every level <= limit and every listed weight;
// also enforces the ordering chain g+ <= g* <= g while scanning.  Weights
// run in parallel up to `threads`.
ConsistencyReport consistency_scan(Group group, std::uint32_t limit, std::span<const int> weights,
                                   unsigned threads = 1, const Registry& reg = Registry::global());

}  // namespace cuspdim
