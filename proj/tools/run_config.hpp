#pragma once

// Flat `key = value` run configuration. Lines starting with '#' are comments.
//
//   coupling, shil, sigma, dt                 dynamics
//   t_init, t_anneal1, t_lock1, t_relax,
//   t_anneal2, t_lock2, sigma_relax           stage plan
//   iterations, seed, colors, threads,
//   lock_tolerance, output                    batch
//
// The default path comes from $PHASEPOTTS_CONFIG when set.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "phasepotts/dynamics.hpp"
#include "phasepotts/scheduler.hpp"

namespace phasepotts::cli {

inline constexpr const char* kConfigEnvVar = "PHASEPOTTS_CONFIG";

struct RunConfig {
  DynamicsParams dynamics;
  StagePlan plan;
  std::size_t iterations = 40;
  std::uint64_t master_seed = 1;
  int colors = 4;
  std::size_t threads = 0;
  double lock_tolerance = kDefaultLockTolerance;
  std::string output;

  // Throws ParameterError unless iterations >= 1 and colors is 2, 4, 8 or 16.
  void validate() const;
  int stages() const;
};

// Applies `key = value` lines on top of `config`. Throws ParseError with the
// offending line number.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

std::string format_config(const RunConfig& config);

}  // namespace phasepotts::cli
