#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "phasepotts/dynamics.hpp"
#include "phasepotts/graph.hpp"

namespace phasepotts {

// Potts spins in {0..arity-1}. For arity 2 the Ising value is +1 for 0 and
// -1 for 1.
struct SpinAssignment {
  std::vector<int> values;
  int arity = 2;

  // Throws ParameterError if arity < 2 or a value is out of range.
  void validate() const;
};

// n x N matrix of {0,1}; rows need not be one-hot.
class OneHotAssignment {
 public:
  OneHotAssignment(std::size_t nodes, std::size_t colors);
  static OneHotAssignment from_coloring(std::span<const int> coloring,
                                        std::size_t colors);

  std::size_t nodes() const noexcept { return nodes_; }
  std::size_t colors() const noexcept { return colors_; }
  std::uint8_t at(std::size_t node, std::size_t color) const {
    return bits_[node * colors_ + color];
  }
  void set(std::size_t node, std::size_t color, bool value) {
    bits_[node * colors_ + color] = value ? 1 : 0;
  }

 private:
  std::size_t nodes_;
  std::size_t colors_;
  std::vector<std::uint8_t> bits_;
};

// sum_E J_ij s_i s_j with s in {-1,+1}.
double ising_energy(const Graph& graph, const SpinAssignment& spins);

// sum_E J_ij cos(theta_i - theta_j). Serves the 2-phase Ising and the
// N-phase vector Potts forms alike.
double phase_energy(const Graph& graph, std::span<const double> phases);

// sum_E J_ij [s_i == s_j].
double potts_energy(const Graph& graph, std::span<const int> spins);
double potts_energy(const Graph& graph, const SpinAssignment& spins);

// One-hot Ising encoding of N-coloring:
//   J * sum_i (1 - sum_k s_ik)^2 + J * sum_E sum_k s_ik s_jk
double ising_coloring_energy(const Graph& graph, const OneHotAssignment& onehot,
                             double penalty = 1.0);

// K_c * sum_{E, gate on} J_ij cos(theta_i - theta_j)
//   - (K_s / 2) * sum_{i: shil on} cos(2 (theta_i - phi_i))
double lyapunov_energy(const Graph& graph, std::span<const double> phases,
                       const CouplingGate& gate, const ShilConfig& shil,
                       const DynamicsParams& params);

}  // namespace phasepotts
