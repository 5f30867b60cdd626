#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace ccl {

/// Worker count: `requested` if given, else the CCL_THREADS environment
/// variable, else 1. Always at least 1.
unsigned resolve_thread_count(std::optional<unsigned> requested = std::nullopt);

/// Calls body(i) for every i in [0, n) on up to `threads` workers. Work is
/// handed out by an atomic counter; callers write results into slot i so
/// the outcome never depends on completion order. The first exception
/// thrown by any body is rethrown after all workers have joined.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

/// Indexed gather: out[i] = fn(i).
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<T> out(n);
  parallel_for(n, threads, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace ccl
