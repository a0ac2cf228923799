#include "phasepotts/dynamics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "phasepotts/errors.hpp"
#include "phasepotts/hamiltonian.hpp"
#include "test_support.hpp"

namespace phasepotts {
namespace {

constexpr double kPi = std::numbers::pi;

DynamicsParams noiseless(double coupling, double shil, double dt = 0.01) {
  DynamicsParams p;
  p.coupling = coupling;
  p.shil = shil;
  p.sigma = 0.0;
  p.dt = dt;
  return p;
}

double circular_gap(double a, double b) {
  const double d = std::abs(wrap_phase(a) - wrap_phase(b));
  return std::min(d, 2 * kPi - d);
}

TEST(WrapPhase, Range) {
  EXPECT_DOUBLE_EQ(wrap_phase(0.0), 0.0);
  EXPECT_DOUBLE_EQ(wrap_phase(2 * kPi), 0.0);
  EXPECT_NEAR(wrap_phase(-0.5), 2 * kPi - 0.5, 1e-15);
  EXPECT_NEAR(wrap_phase(7.0), 7.0 - 2 * kPi, 1e-15);
  EXPECT_DOUBLE_EQ(wrap_phase(-1e-300), 0.0);
}

TEST(RandomInit, SingleNode) {
  NodeStreams streams(1, 1);
  const auto s = random_init(1, streams);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_GE(s.phases[0], 0.0);
  EXPECT_LT(s.phases[0], 2 * kPi);
  EXPECT_EQ(s.time, 0.0);
}

TEST(RandomInit, Deterministic) {
  NodeStreams a(42, 100), b(42, 100);
  EXPECT_EQ(random_init(100, a).phases, random_init(100, b).phases);
}

TEST(RandomInit, LawOfLargeNumbers) {
  NodeStreams streams(7, 10'000);
  const auto s = random_init(10'000, streams);
  double c = 0.0, sn = 0.0;
  for (double t : s.phases) {
    c += std::cos(t);
    sn += std::sin(t);
  }
  EXPECT_LT(std::abs(c / 10'000), 0.05);
  EXPECT_LT(std::abs(sn / 10'000), 0.05);
}

TEST(Step, NullDynamicsOnlyAdvancesTime) {
  const auto g = kings_graph(3);
  NodeStreams streams(1, 9);
  const auto s0 = random_init(9, streams);
  const auto s1 = step(s0, g, CouplingGate::all_on(g), ShilConfig::uniform(9, 0.0),
                       noiseless(0.0, 0.0), streams);
  EXPECT_EQ(s1.phases, s0.phases);
  EXPECT_DOUBLE_EQ(s1.time, 0.01);
}

TEST(Step, AntiPhasePairIsFixedPoint) {
  const Graph g(2, {{0, 1}});
  NodeStreams streams(1, 2);
  PhaseState s{{0.0, kPi}, 0.0};
  const auto next = step(s, g, CouplingGate::all_on(g), ShilConfig::disabled(2),
                         noiseless(1.0, 0.0), streams);
  EXPECT_NEAR(next.phases[0], 0.0, 1e-15);
  EXPECT_NEAR(next.phases[1], kPi, 1e-15);
}

TEST(Step, ShilPullsTowardLockPoint) {
  const Graph g(1, {});
  NodeStreams streams(1, 1);
  const auto next = step({{0.1}, 0.0}, g, CouplingGate::all_on(g), ShilConfig::uniform(1, 0.0),
                         noiseless(0.0, 1.0), streams);
  // Euler step of d(theta)/dt = -sin(2 theta).
  EXPECT_NEAR(next.phases[0], 0.1 - 0.01 * std::sin(0.2), 1e-15);
  EXPECT_LT(next.phases[0], 0.1);
}

TEST(Step, SignConventionPushesCoupledPhasesApart) {
  const Graph g(2, {{0, 1}});
  NodeStreams streams(1, 2);
  const auto next = step({{0.0, 0.5}, 0.0}, g, CouplingGate::all_on(g), ShilConfig::disabled(2),
                         noiseless(1.0, 0.0), streams);
  EXPECT_GT(circular_gap(next.phases[0], next.phases[1]), 0.5);
}

TEST(Step, DimensionAndParameterErrors) {
  const auto g = complete_graph(3);
  NodeStreams streams(1, 3);
  const PhaseState s{{0.0, 1.0, 2.0}, 0.0};
  const auto p = noiseless(1.0, 1.0);
  EXPECT_THROW(step({{0.0}, 0.0}, g, CouplingGate::all_on(g), ShilConfig::disabled(3), p, streams),
               DimensionError);
  EXPECT_THROW(step(s, g, CouplingGate{{true}}, ShilConfig::disabled(3), p, streams),
               DimensionError);
  EXPECT_THROW(step(s, g, CouplingGate::all_on(g), ShilConfig::disabled(2), p, streams),
               DimensionError);
  NodeStreams wrong(1, 2);
  EXPECT_THROW(step(s, g, CouplingGate::all_on(g), ShilConfig::disabled(3), p, wrong),
               DimensionError);
  auto bad = p;
  bad.dt = 0.3;  // 0.3 * max(2, 2) = 0.6 >= 0.5
  EXPECT_THROW(step(s, g, CouplingGate::all_on(g), ShilConfig::disabled(3), bad, streams),
               ParameterError);
  bad = p;
  bad.sigma = -1.0;
  EXPECT_THROW(step(s, g, CouplingGate::all_on(g), ShilConfig::disabled(3), bad, streams),
               ParameterError);
}

TEST(StepCount, RoundsNearIntegersAndCeilsOtherwise) {
  EXPECT_EQ(step_count(20.0, 0.01), 2000u);
  EXPECT_EQ(step_count(5.0, 0.01), 500u);
  EXPECT_EQ(step_count(0.0, 0.01), 0u);
  EXPECT_EQ(step_count(0.015, 0.01), 2u);
  EXPECT_THROW(step_count(-1.0, 0.01), ParameterError);
}

TEST(Evolve, ZeroDurationIsIdentity) {
  const auto g = kings_graph(2);
  NodeStreams streams(3, 4);
  const auto s0 = random_init(4, streams);
  DynamicsParams p;
  const auto s1 = evolve(s0, 0.0, g, CouplingGate::all_on(g), ShilConfig::disabled(4), p, streams);
  EXPECT_EQ(s1.phases, s0.phases);
  EXPECT_EQ(s1.time, s0.time);
}

// d(Delta)/dt = 2 sin(Delta) has tan(Delta/2) = tan(Delta0/2) e^{2t}.
TEST(Evolve, TwoOscillatorsReachAntiPhase) {
  const Graph g(2, {{0, 1}});
  NodeStreams streams(1, 2);
  const auto s = evolve({{0.0, kPi / 2}, 0.0}, 20.0, g, CouplingGate::all_on(g),
                        ShilConfig::disabled(2), noiseless(1.0, 0.0), streams);
  const double analytic = 2 * std::atan(std::tan(kPi / 4) * std::exp(40.0));
  EXPECT_NEAR(analytic, kPi, 1e-12);
  EXPECT_LT(std::abs(circular_gap(s.phases[0], s.phases[1]) - kPi), 0.01);
  EXPECT_NEAR(s.time, 20.0, 1e-9);
}

// psi = theta - phi obeys d(psi)/dt = -sin(2 psi): tan(psi) = tan(psi0) e^{-2t}.
TEST(Evolve, ShilLocksToQuarterTurnTargets) {
  const Graph g(1, {});
  NodeStreams streams(1, 1);
  const auto s = evolve({{0.3}, 0.0}, 20.0, g, CouplingGate::all_on(g),
                        ShilConfig::uniform(1, kShil2Phase), noiseless(0.0, 1.0), streams);
  const double psi = std::atan(std::tan(0.3 - kPi / 2) * std::exp(-40.0));
  const double analytic = kPi / 2 + psi;
  EXPECT_NEAR(s.phases[0], analytic, 1e-6);
  EXPECT_TRUE(circular_gap(s.phases[0], kPi / 2) < 0.01 ||
              circular_gap(s.phases[0], 3 * kPi / 2) < 0.01);
}

TEST(EvolveProperties, LyapunovDescentWithoutNoise) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(3 + rng() % 15);
    const auto g = testing::random_graph(rng, n, 0.4, true);
    NodeStreams streams(rng(), n);
    PhaseState s = random_init(n, streams);
    CouplingGate gate = CouplingGate::all_on(g);
    for (std::size_t e = 0; e < gate.active.size(); ++e) gate.active[e] = rng() % 4 != 0;
    ShilConfig shil = ShilConfig::uniform(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      shil.enabled[i] = rng() % 2;
      shil.select[i] = rng() % 2 ? kShil1Phase : kShil2Phase;
    }
    const auto p = noiseless(1.0, 2.5);
    double energy = lyapunov_energy(g, s.phases, gate, shil, p);
    for (int k = 0; k < 1000; ++k) {
      s = step(s, g, gate, shil, p, streams);
      const double next = lyapunov_energy(g, s.phases, gate, shil, p);
      ASSERT_LE(next, energy + p.dt * p.dt) << "trial " << trial << " step " << k;
      energy = next;
    }
  }
}

TEST(EvolveProperties, ShilBinarizesEveryStartingPhase) {
  const Graph g(1, {});
  for (double phi : {kShil1Phase, kShil2Phase}) {
    for (int k = 0; k < 50; ++k) {
      const double theta0 = 2 * kPi * (k + 0.37) / 50;
      NodeStreams streams(1, 1);
      const auto s = evolve({{theta0}, 0.0}, 10.0 / 1.5, g, CouplingGate::all_on(g),
                            ShilConfig::uniform(1, phi), noiseless(0.0, 1.5), streams);
      const double d = std::min(circular_gap(s.phases[0], phi), circular_gap(s.phases[0], phi + kPi));
      ASSERT_LT(d, 1e-3) << "theta0 " << theta0 << " phi " << phi;
    }
  }
}

TEST(EvolveProperties, DeterministicAndWrapped) {
  const auto g = kings_graph(6);
  DynamicsParams p;
  p.sigma = 0.5;
  auto run = [&] {
    NodeStreams streams(99, g.node_count());
    auto s = random_init(g.node_count(), streams);
    for (int k = 0; k < 200; ++k) {
      s = step(s, g, CouplingGate::all_on(g), ShilConfig::uniform(g.node_count(), 0.0), p, streams);
      for (double t : s.phases) {
        EXPECT_GE(t, 0.0);
        EXPECT_LT(t, 2 * kPi);
      }
    }
    return s;
  };
  EXPECT_EQ(run().phases, run().phases);
}

TEST(Trajectory, CsvHeaderAndStride) {
  const Graph g(2, {{0, 1}});
  std::ostringstream out;
  CsvTrajectoryWriter writer(out, 2, 10);
  NodeStreams streams(1, 2);
  evolve({{0.0, 1.0}, 0.0}, 1.0, g, CouplingGate::all_on(g), ShilConfig::disabled(2),
         noiseless(1.0, 0.0), streams, &writer);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "time,theta_0,theta_1");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 10);  // 100 steps, every 10th
}

}  // namespace
}  // namespace phasepotts
