#pragma once

#include <cstddef>
#include <functional>

namespace qsw {

/// Worker count: QSW_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
int thread_count();

/// Runs body(0..count-1) on up to thread_count() threads. Each index is
/// processed exactly once; the first exception thrown is rethrown here.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qsw
