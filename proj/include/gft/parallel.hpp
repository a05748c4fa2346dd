#pragma once

#include <cstddef>
#include <functional>

namespace gft {

// Number of workers used by grid scans; the GFT_THREADS environment variable
// caps it (a value of 1 forces serial execution).
int worker_count();

// Runs fn(chunk, begin, end) over a contiguous partition of [0, n).  Callers
// write per-chunk partial results into pre-sized slots and reduce over chunk
// index afterwards, which keeps every reduction deterministic regardless of
// scheduling.  Chunk boundaries depend only on n and the worker count.
void parallel_chunks(std::size_t n,
                     const std::function<void(int chunk, std::size_t begin, std::size_t end)>& fn);

int chunk_count(std::size_t n);

}  // namespace gft
