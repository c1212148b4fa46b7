#pragma once

#include <cstdint>
#include <functional>

namespace flokit {

// effective worker count: explicit request wins, else FLO_KIT_THREADS, else
// hardware concurrency; always at least 1
int resolve_threads(int requested = 0);

// run fn(i) for i in [0, count); partitions into contiguous blocks when more
// than one worker is in play — callers must write results to per-index slots
void parallel_for(int64_t count, int threads, const std::function<void(int64_t)>& fn);

} // namespace flokit
