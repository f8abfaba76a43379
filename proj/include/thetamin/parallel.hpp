#pragma once

#include <cstddef>
#include <functional>

namespace thetamin {

// Hardware parallelism, at least 1.
int default_threads();

// Calls body(i) once for each i in [0, n) on up to `threads` workers
// (threads <= 0 means default_threads()). Callers write results by index,
// so any later reduction is in index order and deterministic. The first
// exception thrown by a worker is rethrown after all workers finish.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

} // namespace thetamin
