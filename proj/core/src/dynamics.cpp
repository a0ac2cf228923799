#include "phasepotts/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "phasepotts/errors.hpp"

namespace phasepotts {

double wrap_phase(double theta) noexcept {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

CouplingGate CouplingGate::all_on(const Graph& graph) {
  return {std::vector<bool>(graph.edge_count(), true)};
}

CouplingGate CouplingGate::all_off(const Graph& graph) {
  return {std::vector<bool>(graph.edge_count(), false)};
}

std::size_t CouplingGate::active_count() const noexcept {
  return static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
}

ShilConfig ShilConfig::disabled(std::size_t nodes) {
  return {std::vector<bool>(nodes, false), std::vector<double>(nodes, kShil1Phase)};
}

ShilConfig ShilConfig::uniform(std::size_t nodes, double phase) {
  return {std::vector<bool>(nodes, true), std::vector<double>(nodes, phase)};
}

void DynamicsParams::validate(std::size_t max_degree) const {
  auto bad = [](const char* name, double v) {
    throw ParameterError(std::string(name) + " out of range: " + std::to_string(v));
  };
  if (!(coupling >= 0.0) || !std::isfinite(coupling)) bad("coupling", coupling);
  if (!(shil >= 0.0) || !std::isfinite(shil)) bad("shil", shil);
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) bad("sigma", sigma);
  if (!(dt > 0.0) || !std::isfinite(dt)) bad("dt", dt);
  const double stiffness = dt * std::max(coupling * static_cast<double>(max_degree), 2.0 * shil);
  if (!(stiffness < 0.5)) {
    throw ParameterError("step too large: dt * max(K_c * max_degree, 2 * K_s) = " +
                         std::to_string(stiffness) + " (must be < 0.5)");
  }
}

PhaseState random_init(std::size_t n, NodeStreams& streams) {
  if (streams.size() != n) {
    throw DimensionError("random_init: " + std::to_string(streams.size()) +
                         " streams for " + std::to_string(n) + " nodes");
  }
  PhaseState state;
  state.phases.resize(n);
  for (std::size_t i = 0; i < n; ++i) state.phases[i] = wrap_phase(streams.uniform_phase(i));
  return state;
}

namespace {

struct ActiveEdge {
  std::size_t i;
  std::size_t j;
  double weight;
};

// Gate and SHIL resolved once for a run of identical steps.
class Integrator {
 public:
  Integrator(const Graph& graph, const CouplingGate& gate, const ShilConfig& shil,
             const DynamicsParams& params, std::size_t state_size, std::size_t stream_count)
      : params_(params), shil_(shil) {
    const std::size_t n = graph.node_count();
    if (state_size != n) {
      throw DimensionError("state has " + std::to_string(state_size) + " phases, graph has " +
                           std::to_string(n) + " nodes");
    }
    if (gate.active.size() != graph.edge_count()) {
      throw DimensionError("gate has " + std::to_string(gate.active.size()) +
                           " flags, graph has " + std::to_string(graph.edge_count()) + " edges");
    }
    if (shil.enabled.size() != n || shil.select.size() != n) {
      throw DimensionError("SHIL config does not match node count");
    }
    if (stream_count != n) {
      throw DimensionError("need one random stream per node");
    }
    params.validate(graph.max_degree());

    for (std::size_t e = 0; e < graph.edge_count(); ++e) {
      if (gate.active[e]) {
        const auto& edge = graph.edge(e);
        active_.push_back({edge.i, edge.j, edge.weight});
      }
    }
    drift_.resize(n);
  }

  void advance(PhaseState& state, NodeStreams& streams) {
    auto& theta = state.phases;
    std::fill(drift_.begin(), drift_.end(), 0.0);
    if (params_.coupling != 0.0) {
      for (const auto& e : active_) {
        const double pull = e.weight * std::sin(theta[e.i] - theta[e.j]);
        drift_[e.i] += pull;
        drift_[e.j] -= pull;
      }
    }
    const double dt = params_.dt;
    const double diffusion = params_.sigma * std::sqrt(dt);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      double rate = params_.coupling * drift_[i];
      if (shil_.enabled[i]) rate -= params_.shil * std::sin(2.0 * (theta[i] - shil_.select[i]));
      double next = theta[i] + dt * rate;
      if (diffusion > 0.0) next += diffusion * streams.standard_normal(i);
      theta[i] = wrap_phase(next);
    }
    state.time += dt;
  }

 private:
  const DynamicsParams& params_;
  const ShilConfig& shil_;
  std::vector<ActiveEdge> active_;
  std::vector<double> drift_;
};

}  // namespace

PhaseState step(const PhaseState& state, const Graph& graph, const CouplingGate& gate,
                const ShilConfig& shil, const DynamicsParams& params, NodeStreams& streams) {
  Integrator integrator(graph, gate, shil, params, state.size(), streams.size());
  PhaseState next = state;
  integrator.advance(next, streams);
  return next;
}

std::size_t step_count(double duration, double dt) {
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw ParameterError("duration must be finite and >= 0");
  }
  if (!(dt > 0.0)) throw ParameterError("dt must be > 0");
  const double ratio = duration / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio)) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::ceil(ratio));
}

PhaseState evolve(PhaseState state, double duration, const Graph& graph,
                  const CouplingGate& gate, const ShilConfig& shil,
                  const DynamicsParams& params, NodeStreams& streams,
                  TrajectoryRecorder* recorder) {
  const std::size_t steps = step_count(duration, params.dt);
  Integrator integrator(graph, gate, shil, params, state.size(), streams.size());
  for (std::size_t k = 0; k < steps; ++k) {
    integrator.advance(state, streams);
    if (recorder) recorder->record(state);
  }
  return state;
}

CsvTrajectoryWriter::CsvTrajectoryWriter(std::ostream& out, std::size_t nodes,
                                         std::size_t stride)
    : out_(out), stride_(std::max<std::size_t>(stride, 1)) {
  out_ << "time";
  for (std::size_t i = 0; i < nodes; ++i) out_ << ",theta_" << i;
  out_ << '\n';
}

void CsvTrajectoryWriter::record(const PhaseState& state) {
  if (calls_++ % stride_ != 0) return;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", state.time);
  out_ << buf;
  for (double theta : state.phases) {
    std::snprintf(buf, sizeof buf, ",%.9g", theta);
    out_ << buf;
  }
  out_ << '\n';
}

}  // namespace phasepotts
