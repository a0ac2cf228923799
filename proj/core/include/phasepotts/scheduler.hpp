#pragma once

// Divide-and-color orchestration of the oscillator array.
//
// 4-coloring runs the stage sequence
//   (a) random phases, free drift for t_init, then coupled anneal (t_anneal1)
//   (b) SHIL_1 on every node with couplings still on (t_lock1); read labels
//   (c) couplings and SHIL off, elevated noise sigma_relax (t_relax)
//   (d) only couplings inside a label group on (t_anneal2)
//   (e) SHIL_1 on label-0 nodes, SHIL_2 on label-1 nodes (t_lock2); read out
//       one of four phases per node.
// 2^m-coloring repeats (c)-(e) once per extra stage, halving each group.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "phasepotts/dynamics.hpp"
#include "phasepotts/graph.hpp"
#include "phasepotts/oracle.hpp"

namespace phasepotts {

struct StagePlan {
  double t_init = 5.0;
  double t_anneal1 = 20.0;
  double t_lock1 = 5.0;
  double t_relax = 5.0;
  double t_anneal2 = 20.0;
  double t_lock2 = 5.0;
  double sigma_relax = 0.5;

  void validate() const;
  // Duration of a run with `stages` binary splits.
  double total(int stages = 2) const noexcept;
};

inline constexpr double kDefaultLockTolerance = 0.15;

struct SolveOptions {
  double lock_tolerance = kDefaultLockTolerance;
  // Precomputed stage-1 baseline; computed from the graph when empty.
  std::optional<CutBaseline> baseline;
  TrajectoryRecorder* recorder = nullptr;
};

struct SolveResult {
  std::uint64_t seed = 0;
  int colors = 4;
  std::vector<int> partition;  // stage-1 max-cut labels
  Coloring coloring;
  double cut_accuracy = 0.0;
  double coloring_accuracy = 0.0;
  double wall_time = 0.0;  // seconds
  CutBaseline cut_baseline;
  bool stage1_locked = false;
  bool final_locked = false;

  bool unlocked_warning() const noexcept {
    return !stage1_locked || !final_locked;
  }
};

// Index of the nearest of K equally spaced phases 2*pi*k/K; ties go to the
// smaller k.
int quantize_phase(double theta, int colors);

struct PartitionReadout {
  std::vector<int> labels;
  bool locked = false;
};

// Binarizes against {0, pi}. locked iff every phase lies within `tolerance`
// of its target.
PartitionReadout partition_from_phases(const PhaseState& state,
                                       double tolerance = kDefaultLockTolerance);

// Edge on iff both endpoints carry the same label.
CouplingGate gate_couplings(const Graph& graph, std::span<const int> labels);

// Every node enabled; label 0 -> SHIL_1 (phase 0), label 1 -> SHIL_2 (pi/2).
ShilConfig assign_shil(std::span<const int> labels);

SolveResult solve_4coloring(const Graph& graph, const DynamicsParams& params,
                            const StagePlan& plan, std::uint64_t seed,
                            const SolveOptions& options = {});

// 2^stages colors. Stage t locks group g (the first t-1 label bits, bit s
// weighted 2^(s-1)) with a SHIL at phase pi * g / 2^(t-1). stages == 2
// reproduces solve_4coloring bit for bit.
SolveResult solve_kcoloring(const Graph& graph, int stages,
                            const DynamicsParams& params, const StagePlan& plan,
                            std::uint64_t seed, const SolveOptions& options = {});

}  // namespace phasepotts
