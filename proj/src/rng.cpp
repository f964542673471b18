#include "levydual/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace levydual {

Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

int default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

void for_each_block(std::int64_t n, int workers,
                    const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn) {
  const std::int64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  if (workers <= 0) workers = default_workers();
  workers = static_cast<int>(std::min<std::int64_t>(workers, std::max<std::int64_t>(blocks, 1)));

  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::int64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      const std::int64_t begin = b * kBlockSize;
      try {
        fn(b, begin, std::min(kBlockSize, n - begin));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(blocks);
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

double sample_inverse_gaussian(Rng& rng, double mean, double shape) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  const double nu = normal(rng);
  const double y = nu * nu;
  const double my = mean * y;
  // Smaller root of the quadratic, written without cancellation:
  // x = mean (s - my) / (s + my) with s = sqrt(4 mean shape y + my^2).
  double x = mean;
  if (y > 0.0) {
    const double s = std::sqrt(4.0 * mean * shape * y + my * my);
    x = mean * (4.0 * mean * shape * y) / ((s + my) * (s + my));
  }
  if (!(x > 0.0)) x = std::numeric_limits<double>::min();
  return uniform(rng) <= mean / (mean + x) ? x : mean * mean / x;
}

}  // namespace levydual
