#include "phasepotts/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "phasepotts/errors.hpp"

namespace phasepotts {

namespace {

void require_nodes(const Graph& graph, std::size_t size, const char* what) {
  if (size != graph.node_count()) {
    throw DimensionError(std::string(what) + " has " + std::to_string(size) +
                         " entries, graph has " + std::to_string(graph.node_count()) + " nodes");
  }
}

}  // namespace

void SpinAssignment::validate() const {
  if (arity < 2) throw ParameterError("spin arity must be >= 2");
  for (int v : values) {
    if (v < 0 || v >= arity) {
      throw ParameterError("spin value " + std::to_string(v) + " outside 0.." +
                           std::to_string(arity - 1));
    }
  }
}

OneHotAssignment::OneHotAssignment(std::size_t nodes, std::size_t colors)
    : nodes_(nodes), colors_(colors), bits_(nodes * colors, 0) {}

OneHotAssignment OneHotAssignment::from_coloring(std::span<const int> coloring,
                                                 std::size_t colors) {
  OneHotAssignment out(coloring.size(), colors);
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    if (coloring[i] < 0 || static_cast<std::size_t>(coloring[i]) >= colors) {
      throw ParameterError("color " + std::to_string(coloring[i]) + " out of range");
    }
    out.set(i, static_cast<std::size_t>(coloring[i]), true);
  }
  return out;
}

double ising_energy(const Graph& graph, const SpinAssignment& spins) {
  require_nodes(graph, spins.values.size(), "spin assignment");
  if (spins.arity != 2) throw ParameterError("Ising energy needs arity 2");
  spins.validate();
  double energy = 0.0;
  for (const auto& e : graph.edges()) {
    const double si = spins.values[e.i] == 0 ? 1.0 : -1.0;
    const double sj = spins.values[e.j] == 0 ? 1.0 : -1.0;
    energy += e.weight * si * sj;
  }
  return energy;
}

double phase_energy(const Graph& graph, std::span<const double> phases) {
  require_nodes(graph, phases.size(), "phase state");
  double energy = 0.0;
  for (const auto& e : graph.edges()) energy += e.weight * std::cos(phases[e.i] - phases[e.j]);
  return energy;
}

double potts_energy(const Graph& graph, std::span<const int> spins) {
  require_nodes(graph, spins.size(), "spin assignment");
  double energy = 0.0;
  for (const auto& e : graph.edges()) {
    if (spins[e.i] == spins[e.j]) energy += e.weight;
  }
  return energy;
}

double potts_energy(const Graph& graph, const SpinAssignment& spins) {
  spins.validate();
  return potts_energy(graph, std::span<const int>(spins.values));
}

double ising_coloring_energy(const Graph& graph, const OneHotAssignment& onehot,
                             double penalty) {
  require_nodes(graph, onehot.nodes(), "one-hot assignment");
  if (onehot.colors() == 0) throw DimensionError("one-hot assignment has no colors");
  double one_per_node = 0.0;
  for (std::size_t i = 0; i < onehot.nodes(); ++i) {
    double row = 0.0;
    for (std::size_t k = 0; k < onehot.colors(); ++k) row += onehot.at(i, k);
    one_per_node += (1.0 - row) * (1.0 - row);
  }
  double conflicts = 0.0;
  for (const auto& e : graph.edges()) {
    for (std::size_t k = 0; k < onehot.colors(); ++k) {
      conflicts += onehot.at(e.i, k) * onehot.at(e.j, k);
    }
  }
  return penalty * one_per_node + penalty * conflicts;
}

double lyapunov_energy(const Graph& graph, std::span<const double> phases,
                       const CouplingGate& gate, const ShilConfig& shil,
                       const DynamicsParams& params) {
  require_nodes(graph, phases.size(), "phase state");
  if (gate.active.size() != graph.edge_count()) {
    throw DimensionError("gate does not match edge count");
  }
  if (shil.enabled.size() != phases.size() || shil.select.size() != phases.size()) {
    throw DimensionError("SHIL config does not match node count");
  }
  double coupling = 0.0;
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    if (!gate.active[k]) continue;
    const auto& e = graph.edge(k);
    coupling += e.weight * std::cos(phases[e.i] - phases[e.j]);
  }
  double locking = 0.0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (shil.enabled[i]) locking += std::cos(2.0 * (phases[i] - shil.select[i]));
  }
  return params.coupling * coupling - 0.5 * params.shil * locking;
}

}  // namespace phasepotts
