#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace centrality {

// CENTRALITY_WORKERS env var, else hardware concurrency, else 1.
int default_workers();

// Splits [0, count) into fixed-size chunks, computes chunk partials on up to
// `workers` threads and merges them in ascending chunk index. Because the
// chunk grid and the merge order are independent of the worker count, the
// merged result is bit-identical for any number of workers.
//
// compute: Partial(std::size_t begin, std::size_t end), runs concurrently.
// merge:   void(Partial&&), runs on the calling thread, strictly in order.
template <class Partial, class Compute, class Merge>
void chunked_reduce(std::size_t count, std::size_t chunk_size, int workers,
                    Compute compute, Merge merge) {
  if (count == 0) return;
  if (chunk_size == 0) chunk_size = 1;
  const std::size_t nchunks = (count + chunk_size - 1) / chunk_size;
  auto chunk_range = [&](std::size_t i) {
    const std::size_t b = i * chunk_size;
    const std::size_t e = std::min(count, b + chunk_size);
    return std::pair<std::size_t, std::size_t>(b, e);
  };

  if (workers <= 1 || nchunks == 1) {
    for (std::size_t i = 0; i < nchunks; ++i) {
      auto [b, e] = chunk_range(i);
      merge(compute(b, e));
    }
    return;
  }

  const int nthreads =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), nchunks));
  // Bound on chunks parked ahead of the merge cursor, so memory stays
  // proportional to the worker count and not to the chunk count.
  const std::size_t max_ahead = 2 * static_cast<std::size_t>(nthreads) + 2;

  std::mutex mu;
  std::condition_variable ready;  // a parked chunk may be mergeable
  std::condition_variable space;  // the cursor advanced
  std::map<std::size_t, Partial> parked;
  std::size_t cursor = 0;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  bool aborted = false;

  auto work = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= nchunks) return;
        {
          // The claimant of chunk `cursor` never waits here, so the merge
          // loop always makes progress.
          std::unique_lock<std::mutex> lk(mu);
          space.wait(lk, [&] { return aborted || i < cursor + max_ahead; });
          if (aborted) return;
        }
        auto [b, e] = chunk_range(i);
        Partial p = compute(b, e);
        std::lock_guard<std::mutex> lk(mu);
        parked.emplace(i, std::move(p));
        ready.notify_all();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lk(mu);
      if (!error) error = std::current_exception();
      aborted = true;
      ready.notify_all();
      space.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);

  {
    std::unique_lock<std::mutex> lk(mu);
    while (cursor < nchunks && !aborted) {
      ready.wait(lk, [&] { return aborted || parked.count(cursor) != 0; });
      if (aborted) break;
      auto node = parked.extract(cursor);
      lk.unlock();
      try {
        merge(std::move(node.mapped()));
      } catch (...) {
        lk.lock();
        if (!error) error = std::current_exception();
        aborted = true;
        ready.notify_all();
        space.notify_all();
        break;
      }
      lk.lock();
      ++cursor;
      space.notify_all();
    }
  }

  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace centrality
