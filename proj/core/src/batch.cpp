#include "phasepotts/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "phasepotts/errors.hpp"
#include "phasepotts/oracle.hpp"
#include "phasepotts/rng.hpp"

namespace phasepotts {

std::uint64_t iteration_seed(std::uint64_t master_seed, std::size_t iteration) {
  return derive_seed(master_seed, iteration);
}

std::vector<SolveResult> run_batch(const Graph& graph, const BatchConfig& config) {
  if (config.iterations == 0) throw ParameterError("iterations must be >= 1");
  SolveOptions options;
  options.lock_tolerance = config.lock_tolerance;
  options.baseline = cut_baseline(graph);

  std::vector<SolveResult> results(config.iterations);
  auto solve_one = [&](std::size_t k) {
    const auto seed = iteration_seed(config.master_seed, k);
    results[k] = config.stages == 2
                     ? solve_4coloring(graph, config.params, config.plan, seed, options)
                     : solve_kcoloring(graph, config.stages, config.params, config.plan, seed,
                                       options);
  };

  std::size_t threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, config.iterations);
  if (threads == 1) {
    for (std::size_t k = 0; k < config.iterations; ++k) solve_one(k);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < config.iterations;) {
        try {
          solve_one(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = config.iterations;
        }
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace phasepotts
