#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace vbs::detail {

/// Splits [0, count) into contiguous ranges, one per worker. `body(begin, end)`
/// must only write state owned by its range.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body, std::size_t min_chunk = 1024) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(1, count / min_chunk));
  if (workers <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

}  // namespace vbs::detail
