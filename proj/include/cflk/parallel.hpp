#pragma once

#include <cstddef>
#include <functional>

namespace cflk::parallel {

/// Worker cap currently in effect: explicit set_thread_count() wins, then the
/// CFLK_THREADS environment variable, then the hardware concurrency.
std::size_t thread_count();

/// 0 restores automatic selection.
void set_thread_count(std::size_t n);

/// Runs body(i) for i in [begin, end) on up to thread_count() workers with
/// static contiguous chunking. Nested calls run inline on the calling worker,
/// so results never depend on the schedule. Rethrows the first body exception.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

}  // namespace cflk::parallel
