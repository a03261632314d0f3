#pragma once

#include <cstddef>
#include <functional>

namespace gkplab {

/// Number of workers to use for a parallel region. `requested == 0` means
/// auto (hardware concurrency). The GKP_LAB_THREADS environment variable,
/// when set to a positive value, caps the result; GKP_LAB_THREADS=0 leaves
/// auto behaviour. Always returns at least 1.
int resolve_worker_count(int requested);

/// Runs body(i) for i in [0, count) on `workers` threads, contiguous chunks.
/// Callers keep determinism by writing results into slot i (or by reducing
/// with an associative, commutative operation).
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

/// Chunked variant: body(begin, end) per worker. Cheaper when the per-index
/// work is tiny and the caller keeps per-chunk accumulators.
void parallel_chunks(std::size_t count, int workers,
                     const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace gkplab
