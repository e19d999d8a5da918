#pragma once

// Fixed-chunk parallel loops. Work is split into chunks independent of the
// thread count and results are combined in chunk order, so outputs do not
// depend on how many workers ran.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace padtrop {

// Calls body(chunk) for chunk in [0, chunks) on up to `threads` workers.
// The first exception thrown by any chunk is rethrown.
template <class Body>
void parallel_chunks(std::size_t chunks, unsigned threads, Body&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        body(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = chunks;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Maps every chunk to a value and returns them in chunk order.
template <class T, class Body>
std::vector<T> parallel_map_chunks(std::size_t chunks, unsigned threads, Body&& body) {
  std::vector<T> out(chunks);
  parallel_chunks(chunks, threads, [&](std::size_t c) { out[c] = body(c); });
  return out;
}

}  // namespace padtrop
