// parallel.hpp
//
// Index-parallel map with results stored by index, so output order never
// depends on scheduling. LSL_THREADS caps the worker count.

#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace lsl {

/// LSL_THREADS if set to a positive integer, else hardware concurrency (>= 1).
unsigned thread_count();

/// SplitMix64 finalizer; used to derive per-instance seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

template <class F>
auto parallel_map(std::size_t count, F&& fn, unsigned threads)
    -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = threads == 0 ? 1 : threads;
  if (workers == 1 || count < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers && w < count; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace lsl
