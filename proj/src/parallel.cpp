#include "schneider/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace schneider {

unsigned effective_threads(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("SCHNEIDER_LAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_blocks(std::uint64_t total, std::uint64_t block_size, unsigned threads,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  if (block_size == 0) block_size = 1;
  const std::size_t nblocks = static_cast<std::size_t>((total + block_size - 1) / block_size);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(effective_threads(threads), nblocks));

  if (workers <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b) {
      const std::uint64_t begin = b * block_size;
      fn(b, begin, std::min(total, begin + block_size));
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      const std::uint64_t begin = b * block_size;
      try {
        fn(b, begin, std::min(total, begin + block_size));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace schneider
