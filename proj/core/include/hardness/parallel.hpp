// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace hardness {

// Worker count: HARDNESS_THREADS when set to a positive integer, otherwise
// the hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, count) over contiguous blocks. Each index is
// visited exactly once, so callers that write only slot i get results
// identical to a serial loop. The first exception thrown is rethrown. Calls
// made from inside a worker run serially on that worker.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace hardness
