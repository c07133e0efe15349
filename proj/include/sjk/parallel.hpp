#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace sjk {

/// out[i] = fn(in[i]), strided across up to `threads` workers. Output order
/// never depends on the thread count. The first exception (by worker id) wins.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& in, Fn fn, unsigned threads) {
  using R = decltype(fn(in.front()));
  std::vector<R> out(in.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(in.size())));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = id; i < in.size(); i += workers) out[i] = fn(in[i]);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

inline unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace sjk
