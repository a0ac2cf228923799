#include "phasepotts/scheduler.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "phasepotts/errors.hpp"
#include "phasepotts/metrics.hpp"

namespace phasepotts {

void StagePlan::validate() const {
  const double durations[] = {t_init, t_anneal1, t_lock1, t_relax, t_anneal2, t_lock2};
  for (double d : durations) {
    if (!(d >= 0.0) || !std::isfinite(d)) throw ParameterError("stage durations must be >= 0");
  }
  if (!(sigma_relax >= 0.0) || !std::isfinite(sigma_relax)) {
    throw ParameterError("sigma_relax must be >= 0");
  }
}

double StagePlan::total(int stages) const noexcept {
  if (stages < 1) return t_init;
  return t_init + t_anneal1 + t_lock1 + (stages - 1) * (t_relax + t_anneal2 + t_lock2);
}

namespace {

double circular_distance(double a, double b) {
  const double d = std::abs(wrap_phase(a) - wrap_phase(b));
  return std::min(d, kTwoPi - d);
}

}  // namespace

int quantize_phase(double theta, int colors) {
  if (colors < 2) throw ParameterError("quantize_phase needs K >= 2");
  if (!std::isfinite(theta)) throw ParameterError("phase must be finite");
  const double w = wrap_phase(theta);
  int best = 0;
  double best_distance = circular_distance(w, 0.0);
  for (int k = 1; k < colors; ++k) {
    const double d = circular_distance(w, kTwoPi * k / colors);
    if (d < best_distance) {
      best = k;
      best_distance = d;
    }
  }
  return best;
}

PartitionReadout partition_from_phases(const PhaseState& state, double tolerance) {
  if (!(tolerance > 0.0 && tolerance < std::numbers::pi / 2)) {
    throw ParameterError("lock tolerance must lie in (0, pi/2)");
  }
  PartitionReadout out{std::vector<int>(state.size()), true};
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double theta = state.phases[i];
    out.labels[i] = quantize_phase(theta, 2);
    if (circular_distance(theta, std::numbers::pi * out.labels[i]) > tolerance) out.locked = false;
  }
  return out;
}

CouplingGate gate_couplings(const Graph& graph, std::span<const int> labels) {
  if (labels.size() != graph.node_count()) {
    throw DimensionError("labels do not match node count");
  }
  CouplingGate gate{std::vector<bool>(graph.edge_count())};
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    const auto& e = graph.edge(k);
    gate.active[k] = labels[e.i] == labels[e.j];
  }
  return gate;
}

ShilConfig assign_shil(std::span<const int> labels) {
  ShilConfig shil = ShilConfig::uniform(labels.size(), kShil1Phase);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1) throw ParameterError("labels must be binary");
    shil.select[i] = labels[i] == 0 ? kShil1Phase : kShil2Phase;
  }
  return shil;
}

namespace {

struct RunSetup {
  CutBaseline baseline;
  std::chrono::steady_clock::time_point start;
};

RunSetup prepare(const Graph& graph, const DynamicsParams& params, const StagePlan& plan,
                 const SolveOptions& options) {
  if (graph.node_count() == 0) throw ParameterError("graph has no nodes");
  params.validate(graph.max_degree());
  DynamicsParams relax = params;
  relax.sigma = plan.sigma_relax;
  relax.validate(graph.max_degree());
  plan.validate();
  RunSetup setup;
  setup.start = std::chrono::steady_clock::now();
  setup.baseline = options.baseline ? *options.baseline : cut_baseline(graph);
  return setup;
}

void finish(SolveResult& result, const Graph& graph, const RunSetup& setup) {
  result.cut_baseline = setup.baseline;
  result.cut_accuracy = setup.baseline.value > 0.0
                            ? cut_accuracy(graph, result.partition, setup.baseline.value)
                            : 1.0;
  result.coloring_accuracy = coloring_accuracy(graph, result.coloring);
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - setup.start).count();
}

}  // namespace

SolveResult solve_4coloring(const Graph& graph, const DynamicsParams& params,
                            const StagePlan& plan, std::uint64_t seed,
                            const SolveOptions& options) {
  const RunSetup setup = prepare(graph, params, plan, options);
  const std::size_t n = graph.node_count();
  auto* rec = options.recorder;

  NodeStreams streams(seed, n);
  DynamicsParams relax = params;
  relax.sigma = plan.sigma_relax;
  const auto all_on = CouplingGate::all_on(graph);
  const auto all_off = CouplingGate::all_off(graph);
  const auto no_shil = ShilConfig::disabled(n);

  // (a) random start, free drift, then coupled anneal.
  PhaseState state = random_init(n, streams);
  if (rec) rec->record(state);
  state = evolve(std::move(state), plan.t_init, graph, all_off, no_shil, params, streams, rec);
  state = evolve(std::move(state), plan.t_anneal1, graph, all_on, no_shil, params, streams, rec);

  // (b) SHIL_1 everywhere, couplings still on; read the max-cut labels.
  const auto shil1 = ShilConfig::uniform(n, kShil1Phase);
  state = evolve(std::move(state), plan.t_lock1, graph, all_on, shil1, params, streams, rec);
  PartitionReadout readout = partition_from_phases(state, options.lock_tolerance);

  // (c) everything off, phases re-randomize through elevated jitter.
  state = evolve(std::move(state), plan.t_relax, graph, all_off, no_shil, relax, streams, rec);

  // (d) anneal the two label groups independently.
  const auto gate = gate_couplings(graph, readout.labels);
  state = evolve(std::move(state), plan.t_anneal2, graph, gate, no_shil, params, streams, rec);

  // (e) SHIL_1 on label 0, SHIL_2 on label 1.
  const auto shil2 = assign_shil(readout.labels);
  state = evolve(std::move(state), plan.t_lock2, graph, gate, shil2, params, streams, rec);

  SolveResult result;
  result.seed = seed;
  result.colors = 4;
  result.stage1_locked = readout.locked;
  result.partition = std::move(readout.labels);
  result.coloring.resize(n);
  result.final_locked = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = state.phases[i];
    result.coloring[i] = quantize_phase(theta, 4);
    // Locked means sitting on one of the two targets of the node's own SHIL.
    const double phi = shil2.select[i];
    const double target = phi + std::numbers::pi * quantize_phase(theta - phi, 2);
    if (circular_distance(theta, target) > options.lock_tolerance) result.final_locked = false;
  }
  finish(result, graph, setup);
  return result;
}

SolveResult solve_kcoloring(const Graph& graph, int stages, const DynamicsParams& params,
                            const StagePlan& plan, std::uint64_t seed,
                            const SolveOptions& options) {
  if (stages < 1 || stages > 16) throw ParameterError("stages must be in 1..16");
  const RunSetup setup = prepare(graph, params, plan, options);
  const std::size_t n = graph.node_count();
  const int colors = 1 << stages;
  auto* rec = options.recorder;

  NodeStreams streams(seed, n);
  DynamicsParams relax = params;
  relax.sigma = plan.sigma_relax;
  const auto all_off = CouplingGate::all_off(graph);
  const auto no_shil = ShilConfig::disabled(n);

  PhaseState state = random_init(n, streams);
  if (rec) rec->record(state);
  state = evolve(std::move(state), plan.t_init, graph, all_off, no_shil, params, streams, rec);

  SolveResult result;
  result.seed = seed;
  result.colors = colors;
  std::vector<int> group(n, 0);
  bool locked = true;

  for (int stage = 1; stage <= stages; ++stage) {
    const bool first = stage == 1;
    if (!first) {
      state = evolve(std::move(state), plan.t_relax, graph, all_off, no_shil, relax, streams, rec);
    }
    const auto gate = gate_couplings(graph, group);
    state = evolve(std::move(state), first ? plan.t_anneal1 : plan.t_anneal2, graph, gate,
                   no_shil, params, streams, rec);

    // Group g locks to {phi_g, phi_g + pi} with phi_g = pi * g / 2^(stage-1).
    ShilConfig shil = ShilConfig::uniform(n, 0.0);
    const double spacing = std::numbers::pi / static_cast<double>(1 << (stage - 1));
    for (std::size_t i = 0; i < n; ++i) shil.select[i] = spacing * group[i];
    state = evolve(std::move(state), first ? plan.t_lock1 : plan.t_lock2, graph, gate, shil,
                   params, streams, rec);

    locked = true;
    std::vector<int> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
      bits[i] = quantize_phase(state.phases[i] - shil.select[i], 2);
      const double target = shil.select[i] + std::numbers::pi * bits[i];
      if (circular_distance(state.phases[i], target) > options.lock_tolerance) locked = false;
      group[i] += bits[i] << (stage - 1);
    }
    if (first) {
      result.partition = bits;
      result.stage1_locked = locked;
    }
  }

  result.coloring.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.coloring[i] = quantize_phase(state.phases[i], colors);
  result.final_locked = locked;
  finish(result, graph, setup);
  return result;
}

}  // namespace phasepotts
