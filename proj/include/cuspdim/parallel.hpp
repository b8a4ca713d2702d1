#pragma once

// Deterministic block-parallel scans: [lo, hi] is split into fixed blocks,
// workers claim blocks atomically, and per-block results land in index order
// so every reduction is independent of scheduling.

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace cuspdim {

inline unsigned default_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// fn(block_index, block_lo, block_hi) runs once per block; blocks partition
// [lo, hi].  fn must only touch state owned by its block index.
void for_blocks(std::uint64_t lo, std::uint64_t hi, std::uint64_t block_size, unsigned threads,
                const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn);

inline std::size_t block_count(std::uint64_t lo, std::uint64_t hi, std::uint64_t block_size) {
  if (hi < lo) return 0;
  return static_cast<std::size_t>((hi - lo) / block_size + 1);
}

}  // namespace cuspdim
