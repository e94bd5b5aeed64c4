#pragma once

#include <cstddef>
#include <functional>

namespace rhls {

// Thread count used by parallel_for.  Resolution order: RHLS_THREADS
// environment variable (clamped to [1, 256]), else hardware_concurrency,
// else 1.
unsigned thread_count();

// Runs body(i) for i in [0, count), splitting the index range over
// thread_count() workers in contiguous blocks.  Each index is processed by
// exactly one thread and any per-index reduction must stay inside body, so
// results are bit-identical for every thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rhls
