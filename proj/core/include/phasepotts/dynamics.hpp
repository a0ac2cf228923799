#pragma once

// Phase-reduced model of the coupled ring-oscillator array. Each oscillator is
// described only by its phase relative to the common carrier; couplings act
// through Kuramoto terms and sub-harmonic injection (SHIL) through a
// second-harmonic locking term:
//
//   d(theta_i) = [ K_c * sum_{j~i, gate on} J_ij sin(theta_i - theta_j)
//                - K_s * e_i * sin(2 (theta_i - phi_i)) ] dt + sigma dW_i
//
// Positive J_ij pushes coupled phases apart (anti-ferromagnetic). Without
// noise this is the gradient flow of lyapunov_energy() in hamiltonian.hpp.

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <span>
#include <vector>

#include "phasepotts/graph.hpp"
#include "phasepotts/rng.hpp"

namespace phasepotts {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// SHIL select phases in phase-reduced coordinates. SHIL_2 is the injection
// signal shifted by 180 degrees at twice the carrier frequency, which moves
// the lock points by a quarter turn.
inline constexpr double kShil1Phase = 0.0;
inline constexpr double kShil2Phase = std::numbers::pi / 2.0;

// Maps any finite angle into [0, 2*pi); 2*pi itself maps to 0.
double wrap_phase(double theta) noexcept;

struct PhaseState {
  std::vector<double> phases;
  double time = 0.0;

  std::size_t size() const noexcept { return phases.size(); }
};

// One flag per edge of the graph the gate was built for (P_EN).
struct CouplingGate {
  std::vector<bool> active;

  static CouplingGate all_on(const Graph& graph);
  static CouplingGate all_off(const Graph& graph);
  std::size_t active_count() const noexcept;
};

// Per-node SHIL enable (SHIL_EN) and selected lock phase (SHIL_SEL).
struct ShilConfig {
  std::vector<bool> enabled;
  std::vector<double> select;

  static ShilConfig disabled(std::size_t nodes);
  static ShilConfig uniform(std::size_t nodes, double phase);
};

struct DynamicsParams {
  double coupling = 1.0;  // K_c, 1/time
  double shil = 2.5;      // K_s, 1/time
  double sigma = 0.05;    // rad / sqrt(time)
  double dt = 0.01;       // time

  // Throws ParameterError unless all fields are in range and
  // dt * max(K_c * max_degree, 2 * K_s) < 0.5.
  void validate(std::size_t max_degree) const;
};

// Uniform independent phases, time 0.
PhaseState random_init(std::size_t n, NodeStreams& streams);

// One Euler-Maruyama step. Noise is drawn from streams only when sigma > 0.
PhaseState step(const PhaseState& state, const Graph& graph,
                const CouplingGate& gate, const ShilConfig& shil,
                const DynamicsParams& params, NodeStreams& streams);

// evolve() hands the state to the recorder after every step.
class TrajectoryRecorder {
 public:
  virtual ~TrajectoryRecorder() = default;
  virtual void record(const PhaseState& state) = 0;
};

// Writes a `time,theta_0,...,theta_{n-1}` header, then every stride-th state
// it receives (starting with the first).
class CsvTrajectoryWriter : public TrajectoryRecorder {
 public:
  CsvTrajectoryWriter(std::ostream& out, std::size_t nodes,
                      std::size_t stride = 1);
  void record(const PhaseState& state) override;
  std::size_t stride() const noexcept { return stride_; }

 private:
  std::ostream& out_;
  std::size_t stride_;
  std::size_t calls_ = 0;
};

// Number of steps evolve() takes for `duration`: ceil(duration / dt), with
// ratios within 1e-9 of an integer rounded to it.
std::size_t step_count(double duration, double dt);

// Repeated step() for step_count(duration, dt) steps.
PhaseState evolve(PhaseState state, double duration, const Graph& graph,
                  const CouplingGate& gate, const ShilConfig& shil,
                  const DynamicsParams& params, NodeStreams& streams,
                  TrajectoryRecorder* recorder = nullptr);

}  // namespace phasepotts
