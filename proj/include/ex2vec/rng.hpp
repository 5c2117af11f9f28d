#pragma once

#include <cstdint>
#include <random>

namespace ex2vec {

// All randomness in the library flows through generators built here, so a
// run is fully determined by the user-facing seeds. Stream tags keep
// independent uses (init, shuffle, bootstrap cells, per-user sampling)
// decorrelated without sharing generator state.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0,
                                std::uint64_t substream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(substream),
                    static_cast<std::uint32_t>(substream >> 32)};
  return std::mt19937_64(seq);
}

// Stream tags (arbitrary distinct constants).
namespace rng_stream {
constexpr std::uint64_t kParamInit = 0x01;
constexpr std::uint64_t kEpochShuffle = 0x02;
constexpr std::uint64_t kHoldout = 0x03;
constexpr std::uint64_t kBootstrap = 0x04;
constexpr std::uint64_t kSynth = 0x05;
constexpr std::uint64_t kGradCheck = 0x06;
}  // namespace rng_stream

}  // namespace ex2vec
