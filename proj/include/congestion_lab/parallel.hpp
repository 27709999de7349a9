// parallel.hpp — chunked parallel-for where chunk boundaries are fixed by the
// problem size, never by the worker count, so per-chunk outputs merge in a
// reproducible order.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace conlab {

// CONGESTION_LAB_THREADS overrides the worker width everywhere.
inline int default_threads() {
  if (const char* s = std::getenv("CONGESTION_LAB_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// fn(chunk_index, begin, end) over [0, n) split into fixed chunks.
template <class Fn>
void for_each_chunk(int64_t n, int64_t chunk_size, int threads, Fn&& fn) {
  if (n <= 0) return;
  const int64_t n_chunks = (n + chunk_size - 1) / chunk_size;
  if (threads <= 0) threads = default_threads();
  threads = static_cast<int>(std::min<int64_t>(threads, n_chunks));
  if (threads <= 1) {
    for (int64_t c = 0; c < n_chunks; ++c)
      fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    return;
  }
  std::atomic<int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      int64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) break;
      fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace conlab
