#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "qnet/linalg.hpp"
#include "qnet/network.hpp"

namespace qnet {

/// How the ancilla enters each collision.
///  - Collision: a fresh copy of ancilla_init every step.
///  - RepeatedInteraction: the previous step's ancilla marginal; the joint
///    state is re-factorized as anc (x) net before every step.
///  - Coherent: the ancilla is never reset nor re-factorized; the joint
///    ancilla+network state evolves as U^n and marginals are only taken for
///    the records.
enum class ProtocolMode { Collision, RepeatedInteraction, Coherent };

std::string_view to_string(ProtocolMode mode);
ProtocolMode parse_mode(std::string_view text);

struct ProtocolConfig {
  NetworkSpec spec;
  ProtocolMode mode = ProtocolMode::Collision;
  double dt = 0.4;
  std::size_t steps = 1;
  PureState ancilla_init = PureState::basis("0");
  PureState network_init = PureState::basis("000");

  void validate() const;
  friend bool operator==(const ProtocolConfig&, const ProtocolConfig&) = default;
};

struct StepRecord {
  std::size_t n;  // number of completed collisions
  double time;    // n * dt
  DensityMatrix network_state;
  DensityMatrix ancilla_state;
};

struct Trajectory {
  ProtocolConfig config;
  std::vector<StepRecord> records;  // records[0] is the initial state
};

/// Hermitizes and renormalizes a state produced by a numerical step.
/// Throws NumericalError when the required correction exceeds 1e-8.
DensityMatrix restore_state(ComplexMatrix m, std::string_view context);

/// One collision: rho_tot = anc (x) net, rho_tot' = U rho_tot U^dagger, then
/// both marginals. The ancilla is qubit 0 of the joint register.
std::pair<DensityMatrix, DensityMatrix> collision_step(const DensityMatrix& net, const DensityMatrix& anc,
                                                       const ComplexMatrix& u);

Trajectory run_protocol(const ProtocolConfig& config);

}  // namespace qnet
