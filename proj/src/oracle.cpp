#include "cuspdim/oracle.hpp"

#include <mutex>
#include <stdexcept>

#include "cuspdim/parallel.hpp"

namespace cuspdim {

OracleTable OracleTable::build(Group group, int k, std::uint32_t limit, const Registry& reg) {
  if (limit == 0) throw std::domain_error("oracle: limit must be positive");
  OracleTable t;
  t.group_ = group;
  t.k_ = k;
  t.limit_ = limit;
  t.g_full_.assign(std::size_t(limit) + 1, 0);
  t.g_plus_.assign(std::size_t(limit) + 1, 0);
  t.g_star_.assign(std::size_t(limit) + 1, 0);

  DimensionSieve full(group == Group::gamma0 ? Family::g0 : Family::g1, k, reg);
  full.fill(1, limit, std::span(t.g_full_).subspan(1));

  const DivisorTable divs = DivisorTable::build(limit);
  for (std::uint32_t n = 1; n <= limit; ++n) {
    // g+(n) = g(n) - sum_{d|n, d<n} tau(n/d) g+(d); g*(n) = sum_{d|n} g+(d).
    std::int64_t plus = t.g_full_[n];
    std::int64_t star = 0;
    for (std::uint32_t d : divs.of(n)) {
      if (d < n)
        plus = checked_add(
            plus, checked_mul(-static_cast<std::int64_t>(divs.of(n / d).size()), t.g_plus_[d]));
      star = checked_add(star, t.g_plus_[d]);
    }
    if (plus < 0)
      throw std::logic_error("oracle: negative newform dimension at level " + std::to_string(n));
    t.g_plus_[n] = plus;
    t.g_star_[n] = checked_add(star, plus);
  }
  return t;
}

LazyOracle::LazyOracle(Group group, int k, const Registry& reg)
    : group_(group), k_(k), reg_(reg) {}

std::int64_t LazyOracle::newform_dim(std::uint32_t level) {
  if (level == 0) throw std::domain_error("oracle: level must be positive");
  if (level < known_.size() && known_[level]) return memo_[level];
  if (level >= known_.size()) {
    known_.resize(std::size_t(level) + 1, false);
    memo_.resize(std::size_t(level) + 1, 0);
  }
  DimensionSieve full(group_ == Group::gamma0 ? Family::g0 : Family::g1, k_, reg_);
  std::int64_t plus = full.at(level);
  for (std::uint64_t d : divisors(level)) {
    if (d == level) continue;
    plus -= static_cast<std::int64_t>(divisor_count(level / d)) *
            newform_dim(static_cast<std::uint32_t>(d));
  }
  if (plus < 0)
    throw std::logic_error("oracle: negative newform dimension at level " + std::to_string(level));
  known_[level] = true;
  memo_[level] = plus;
  return plus;
}

std::int64_t LazyOracle::star_dim(std::uint32_t level) {
  std::int64_t star = 0;
  for (std::uint64_t d : divisors(level))
    star = checked_add(star, newform_dim(static_cast<std::uint32_t>(d)));
  return star;
}

ConsistencyReport consistency_scan(Group group, std::uint32_t limit, std::span<const int> weights,
                                   unsigned threads, const Registry& reg) {
  ConsistencyReport report;
  report.group = group;
  report.limit = limit;
  report.weights.assign(weights.begin(), weights.end());

  const Family fam_plus = group == Group::gamma0 ? Family::g0plus : Family::g1plus;
  const Family fam_star = group == Group::gamma0 ? Family::g0star : Family::g1star;

  std::mutex merge_mutex;
  std::uint64_t checked = 0;
  std::vector<std::vector<Mismatch>> found(weights.size());

  // One weight per block: each worker owns its slot of `found`.
  for_blocks(0, weights.empty() ? 0 : weights.size() - 1, 1, weights.empty() ? 1 : threads,
             [&](std::size_t slot, std::uint64_t wi, std::uint64_t) {
               if (weights.empty()) return;
               const int k = weights[wi];
               OracleTable oracle = OracleTable::build(group, k, limit, reg);
               std::vector<std::int64_t> plus(std::size_t(limit) + 1, 0);
               std::vector<std::int64_t> star(std::size_t(limit) + 1, 0);
               DimensionSieve(fam_plus, k, reg).fill(1, limit, std::span(plus).subspan(1));
               DimensionSieve(fam_star, k, reg).fill(1, limit, std::span(star).subspan(1));
               std::uint64_t local_checked = 0;
               for (std::uint32_t n = 1; n <= limit; ++n) {
                 ++local_checked;
                 if (plus[n] != oracle.newform_dim(n))
                   found[slot].push_back({group, n, k, '+', plus[n], oracle.newform_dim(n)});
                 if (star[n] != oracle.star_dim(n))
                   found[slot].push_back({group, n, k, '*', star[n], oracle.star_dim(n)});
                 if (!(plus[n] <= star[n] && star[n] <= oracle.full_dim(n)))
                   found[slot].push_back({group, n, k, '<', plus[n], oracle.full_dim(n)});
               }
               std::lock_guard lock(merge_mutex);
               checked += local_checked;
             });

  report.checked = checked;
  for (auto& v : found)
    report.mismatches.insert(report.mismatches.end(), v.begin(), v.end());
  return report;
}

}  // namespace cuspdim
