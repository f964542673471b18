#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace levydual {

using Rng = std::mt19937_64;

/// Paths are generated in fixed-size blocks; block k always draws from
/// stream k, so results do not depend on how blocks are scheduled.
inline constexpr std::int64_t kBlockSize = 8192;

/// Independent generator for (seed, stream).
Rng make_stream(std::uint64_t seed, std::uint64_t stream);

/// Number of workers used when the caller passes 0.
int default_workers();

/// Calls fn(block, begin, count) for each block of [0, n) on `workers`
/// threads. Blocks are claimed dynamically; fn must only touch per-block state.
void for_each_block(std::int64_t n, int workers,
                    const std::function<void(std::int64_t, std::int64_t, std::int64_t)>& fn);

/// Inverse Gaussian variate IG(mean, shape) by the transformation-with-roots
/// method: one normal and one uniform per draw. Always strictly positive.
double sample_inverse_gaussian(Rng& rng, double mean, double shape);

}  // namespace levydual
