#ifndef SIZEWAVE_PARALLEL_HPP
#define SIZEWAVE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace sizewave {

// Runs fn(i) for i in [0,n), split across `threads` workers. Each index must
// write only its own slots, so results do not depend on the thread count.
// threads == 0 means hardware concurrency.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

} // namespace sizewave

#endif
