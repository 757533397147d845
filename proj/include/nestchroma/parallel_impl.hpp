#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace nestchroma {

template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, Fn fn) {
  std::vector<R> out(count);
  const int workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        out[i] = fn(i);
      }
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace nestchroma
