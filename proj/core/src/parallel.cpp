#include "gkplab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace gkplab {

int resolve_worker_count(int requested) {
  int n = requested;
  if (n <= 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
  }
  if (const char* env = std::getenv("GKP_LAB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) n = std::min(n, cap);
    } catch (...) {
      // Unparseable value: ignore, keep computed count.
    }
  }
  return std::max(1, n);
}

void parallel_chunks(std::size_t count, int workers,
                     const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  if (w == 1 || count == 1) {
    body(0, count);
    return;
  }
  const std::size_t nchunks = std::min(w, count);
  const std::size_t base = count / nchunks;
  const std::size_t extra = count % nchunks;
  std::vector<std::thread> pool;
  pool.reserve(nchunks);
  std::size_t begin = 0;
  for (std::size_t c = 0; c < nchunks; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    const std::size_t end = begin + len;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  parallel_chunks(count, workers, [&body](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) body(i);
  });
}

}  // namespace gkplab
