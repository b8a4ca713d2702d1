#include "cuspdim/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>

namespace cuspdim {

void for_blocks(std::uint64_t lo, std::uint64_t hi, std::uint64_t block_size, unsigned threads,
                const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
  if (hi < lo) return;
  if (block_size == 0) throw std::domain_error("for_blocks: block size must be positive");
  const std::size_t blocks = block_count(lo, hi, block_size);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks)));

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks) return;
      const std::uint64_t block_lo = lo + b * block_size;
      const std::uint64_t block_hi = std::min(hi, block_lo + block_size - 1);
      try {
        fn(b, block_lo, block_hi);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace cuspdim
