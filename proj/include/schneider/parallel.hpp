#pragma once

#include <cstdint>
#include <functional>

namespace schneider {

/// Worker count resolution: explicit request, else SCHNEIDER_LAB_THREADS,
/// else hardware concurrency. Always at least 1.
unsigned effective_threads(unsigned requested = 0);

/// Partitions [0, total) into fixed-size blocks and runs
/// fn(block_index, begin, end) across workers. Block boundaries do not
/// depend on the worker count, so per-block partials can be combined in
/// block order afterwards and results stay byte-identical under any
/// parallelism.
void parallel_blocks(std::uint64_t total, std::uint64_t block_size, unsigned threads,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn);

}  // namespace schneider
