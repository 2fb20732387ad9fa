#pragma once

#include <cstddef>
#include <functional>

namespace braidhom {

// Worker count: BRAIDHOM_THREADS if set and positive, else the hardware
// concurrency (at least 1).
std::size_t thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads. Results must
// be written to per-index slots; the first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace braidhom
