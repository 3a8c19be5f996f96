#ifndef COOPBF_RNG_HPP
#define COOPBF_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace coopbf {

using Rng = std::mt19937_64;

/// Trials are grouped into fixed-size blocks; block `b` of stream `s` always
/// draws from the same generator, whichever worker evaluates it.
inline constexpr std::size_t kTrialsPerBlock = 4096;

/// Stream tags separate independent consumers of one master seed.
namespace streams {
inline constexpr std::uint64_t kProposed = 1;
inline constexpr std::uint64_t kMimo = 2;
}  // namespace streams

/// Deterministic generator for (master seed, stream, block).
Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t block);

/// Human-readable statement of the derivation rule, echoed in run manifests.
const char* substream_rule();

}  // namespace coopbf

#endif  // COOPBF_RNG_HPP
