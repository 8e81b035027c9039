#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace schub {

// Worker count: explicit request > SCHUB_THREADS env > hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SCHUB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, count) on a small pool. Each work item must be a
// pure computation; results are collected by index so output order is
// deterministic regardless of scheduling.
template <class Result>
std::vector<Result> parallel_map(size_t count,
                                 const std::function<Result(size_t)>& fn,
                                 int threads = 0) {
  std::vector<Result> results(count);
  int nt = resolve_threads(threads);
  if (nt <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(nt);
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
          results[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next.store(count);  // drain remaining work
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

inline void parallel_for(size_t count, const std::function<void(size_t)>& fn,
                         int threads = 0) {
  parallel_map<char>(count, [&](size_t i) { fn(i); return '\0'; }, threads);
}

}  // namespace schub
