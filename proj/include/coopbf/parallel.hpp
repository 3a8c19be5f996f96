#ifndef COOPBF_PARALLEL_HPP
#define COOPBF_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

#include "coopbf/rng.hpp"

namespace coopbf {

/// Counts trials for which an event occurs. Trials are split into blocks of
/// kTrialsPerBlock; each block draws from substream(seed, stream, block) and
/// contributes an integer count, so the total is independent of `workers`.
///
/// `make_trial()` is called once per worker and must return a callable
/// `bool(Rng&)` that owns its scratch state.
template <class MakeTrial>
std::uint64_t count_events(std::uint64_t trials, std::uint64_t seed, std::uint64_t stream,
                           unsigned workers, MakeTrial make_trial) {
  const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  std::vector<std::uint64_t> counts(blocks, 0);
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    auto trial = make_trial();
    for (std::uint64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
      Rng rng = substream(seed, stream, b);
      const std::uint64_t begin = b * kTrialsPerBlock;
      const std::uint64_t end = std::min<std::uint64_t>(trials, begin + kTrialsPerBlock);
      std::uint64_t hits = 0;
      for (std::uint64_t t = begin; t < end; ++t) {
        hits += trial(rng) ? 1U : 0U;
      }
      counts[b] = hits;
    }
  };

  const auto pool_size = static_cast<std::uint64_t>(std::max(1U, workers));
  const auto spawned = std::min(pool_size, blocks) > 0 ? std::min(pool_size, blocks) - 1 : 0;
  std::vector<std::thread> pool;
  pool.reserve(spawned);
  for (std::uint64_t i = 0; i < spawned; ++i) {
    pool.emplace_back(work);
  }
  work();
  for (auto& t : pool) {
    t.join();
  }
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

}  // namespace coopbf

#endif  // COOPBF_PARALLEL_HPP
