#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qpf {

/// Worker count: QFUNCTOR_THREADS caps it, default machine parallelism.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QFUNCTOR_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v < static_cast<long>(hw)) return static_cast<unsigned>(v);
    if (v >= static_cast<long>(hw)) return hw;
  }
  return hw;
}

/// Run f(i) for i in [0, count) on up to worker_count() threads. Results must
/// be written to per-index slots by the caller; order of execution is
/// unspecified, assembly is the caller's (deterministic) concern.
inline void parallel_for(long count, const std::function<void(long)>& f) {
  unsigned workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> threads;
  unsigned spawn = std::min<unsigned>(workers, static_cast<unsigned>(count));
  threads.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) {
    threads.emplace_back([&] {
      for (;;) {
        long i = next.fetch_add(1);
        if (i >= count) return;
        f(i);
      }
    });
  }
  for (auto& th : threads) th.join();
}

} // namespace qpf
