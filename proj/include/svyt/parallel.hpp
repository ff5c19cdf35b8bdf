#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace svyt {

// Applies f to every index in [0, count) using up to `jobs` threads and
// returns the results in index order, so parallel runs emit byte-identical
// output.
template <class F>
auto parallel_index_map(size_t count, int jobs, F f)
    -> std::vector<decltype(f(size_t{0}))> {
  using R = decltype(f(size_t{0}));
  std::vector<R> out(count);
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      out[i] = f(i);
    }
  };
  std::vector<std::thread> pool;
  int n = std::min<int>(jobs, static_cast<int>(count));
  pool.reserve(n);
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace svyt
