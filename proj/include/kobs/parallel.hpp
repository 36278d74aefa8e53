#pragma once

#include <cstddef>
#include <functional>

namespace kobs {

/// Upper bound on worker threads used by every module (0 = hardware concurrency).
void set_thread_cap(std::size_t n);
std::size_t thread_cap();

/// Calls fn(i) for i in [begin, end) over a static partition. Results must not
/// depend on the partition; callers reduce in index order afterwards.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& fn);

}  // namespace kobs
