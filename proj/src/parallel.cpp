#include "membranekit/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace membranekit {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  // Static striding keeps the assignment deterministic; results are written
  // by index so assembly order never depends on scheduling.
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : failures) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace membranekit
