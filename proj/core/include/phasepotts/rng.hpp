#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

namespace phasepotts {

// SplitMix64 (Steele, Lea, Flood). Small state, good statistical quality and
// trivially reproducible in other languages.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Seed of stream `index` under `master`: the SplitMix64 output for state
// master + index * golden_gamma. Used for per-iteration and per-node streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

// One independent random stream per oscillator. Node i always draws from
// stream i, so a subset of nodes sees exactly the noise it would see inside
// the full system.
class NodeStreams {
 public:
  NodeStreams() = default;
  NodeStreams(std::uint64_t seed, std::size_t nodes);

  std::size_t size() const noexcept { return engines_.size(); }

  // Uniform on [0, 2*pi).
  double uniform_phase(std::size_t node);
  double standard_normal(std::size_t node);

  // Copy of the streams for `nodes`, in the given order.
  NodeStreams subset(std::span<const std::size_t> nodes) const;

 private:
  std::vector<SplitMix64> engines_;
  std::vector<std::normal_distribution<double>> normals_;
};

}  // namespace phasepotts
