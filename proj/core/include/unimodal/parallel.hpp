#pragma once

#include <cstddef>
#include <functional>

namespace unimodal {

// Worker count: explicit request, else UNIMODAL_THREADS, else hardware.
unsigned resolve_threads(unsigned requested);

// Runs task(i) for i in [0, count) on a small pool. Tasks write to their own
// slots, so callers get deterministic results by merging in index order.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task);

}  // namespace unimodal
