#pragma once

#include <cstddef>
#include <functional>

namespace hdft {

/// Number of worker threads used by the parallel kernels. Reads HDFT_THREADS
/// once; falls back to the hardware concurrency.
unsigned worker_count();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
/// one chunk per worker. Chunk boundaries depend only on n and the worker
/// count, and every output element is written by exactly one chunk, so
/// results are deterministic as long as body keeps a fixed order within its
/// range.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hdft
