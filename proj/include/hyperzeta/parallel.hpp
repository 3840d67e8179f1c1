#pragma once

// Deterministic fork-join over an index range.  Chunks are contiguous and
// merged in order, so results never depend on the worker count.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hz {

inline unsigned default_workers() {
  if (const char* env = std::getenv("HYPERZETA_WORKERS")) {
    long v = std::atol(env);
    if (v >= 1 && v <= 1024) return unsigned(v);
  }
  return 1;
}

// chunk(lo, hi) -> State; states merged left to right by merge(acc, state)
template <class State, class Chunk, class Merge>
inline State parallel_reduce(uint64_t total, unsigned workers, Chunk chunk, Merge merge) {
  if (workers <= 1 || total < 2) return chunk(0, total);
  unsigned w = workers;
  if (uint64_t(w) > total) w = unsigned(total);
  std::vector<State> parts(w);
  std::vector<std::exception_ptr> errs(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (unsigned i = 0; i < w; ++i) {
    uint64_t lo = total * i / w, hi = total * (i + 1) / w;
    threads.emplace_back([&, i, lo, hi] {
      try {
        parts[i] = chunk(lo, hi);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (unsigned i = 0; i < w; ++i)
    if (errs[i]) std::rethrow_exception(errs[i]);
  State acc = std::move(parts[0]);
  for (unsigned i = 1; i < w; ++i) merge(acc, parts[i]);
  return acc;
}

}  // namespace hz
