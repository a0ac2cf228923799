#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phasepotts/dynamics.hpp"
#include "phasepotts/graph.hpp"
#include "phasepotts/scheduler.hpp"

namespace phasepotts {

struct BatchConfig {
  DynamicsParams params;
  StagePlan plan;
  int stages = 2;  // colors = 2^stages
  std::size_t iterations = 40;
  std::uint64_t master_seed = 1;
  double lock_tolerance = kDefaultLockTolerance;
  // 0 -> std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

// Seed of iteration i: derive_seed(master_seed, i).
std::uint64_t iteration_seed(std::uint64_t master_seed, std::size_t iteration);

// Independent solves, returned in iteration order whatever the thread count.
std::vector<SolveResult> run_batch(const Graph& graph, const BatchConfig& config);

}  // namespace phasepotts
