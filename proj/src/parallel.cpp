#include "anticonc/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace anticonc {

int resolve_thread_count(int requested) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (requested <= 0) return static_cast<int>(hw);
  return static_cast<int>(std::min<unsigned>(static_cast<unsigned>(requested), hw));
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  threads = resolve_thread_count(threads);
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace anticonc
