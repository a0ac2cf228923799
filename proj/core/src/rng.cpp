#include "phasepotts/rng.hpp"

#include <numbers>

namespace phasepotts {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  SplitMix64 mix(master + index * 0x9E3779B97F4A7C15ULL);
  return mix();
}

NodeStreams::NodeStreams(std::uint64_t seed, std::size_t nodes) {
  engines_.reserve(nodes);
  for (std::size_t i = 0; i < nodes; ++i) engines_.emplace_back(derive_seed(seed, i));
  normals_.resize(nodes);
}

double NodeStreams::uniform_phase(std::size_t node) {
  // 53 random bits -> [0, 1), exactly reproducible.
  const double u = static_cast<double>(engines_[node]() >> 11) * 0x1.0p-53;
  return 2.0 * std::numbers::pi * u;
}

double NodeStreams::standard_normal(std::size_t node) {
  return normals_[node](engines_[node]);
}

NodeStreams NodeStreams::subset(std::span<const std::size_t> nodes) const {
  NodeStreams out;
  out.engines_.reserve(nodes.size());
  out.normals_.reserve(nodes.size());
  for (auto v : nodes) {
    out.engines_.push_back(engines_[v]);
    out.normals_.push_back(normals_[v]);
  }
  return out;
}

}  // namespace phasepotts
