#include "qnet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qnet/errors.hpp"
#include "qnet/kernels.hpp"

namespace qnet {

namespace {

inline constexpr double kMaxHygieneCorrection = 1e-8;

std::size_t network_mask(std::size_t n_network) {
  return ((std::size_t{1} << n_network) - 1) << kNetworkOffset;
}

struct Marginals {
  DensityMatrix network;
  DensityMatrix ancilla;
};

Marginals marginals(const ComplexMatrix& joint, std::size_t n_network) {
  const std::size_t n_total = n_network + 1;
  return {restore_state(kernels::partial_trace(joint, n_total, std::size_t{1} << kAncillaIndex), "network marginal"),
          restore_state(kernels::partial_trace(joint, n_total, network_mask(n_network)), "ancilla marginal")};
}

}  // namespace

std::string_view to_string(ProtocolMode mode) {
  switch (mode) {
    case ProtocolMode::Collision: return "collision";
    case ProtocolMode::RepeatedInteraction: return "repeated";
    case ProtocolMode::Coherent: return "coherent";
  }
  return "?";
}

ProtocolMode parse_mode(std::string_view text) {
  if (text == "collision") return ProtocolMode::Collision;
  if (text == "repeated") return ProtocolMode::RepeatedInteraction;
  if (text == "coherent") return ProtocolMode::Coherent;
  throw DomainError("unknown mode '" + std::string(text) + "' (expected collision, repeated or coherent)");
}

void ProtocolConfig::validate() const {
  spec.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be a finite value > 0");
  if (steps < 1) throw DomainError("steps must be at least 1");
  if (ancilla_init.num_qubits() != 1) throw DomainError("ancilla_init must be a single-qubit state");
  if (network_init.num_qubits() != spec.topology.size()) {
    throw DomainError("network_init has " + std::to_string(network_init.num_qubits()) + " qubits but the topology has " +
                      std::to_string(spec.topology.size()));
  }
}

DensityMatrix restore_state(ComplexMatrix m, std::string_view context) {
  const std::size_t n = m.dim();
  double correction = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      correction = std::max(correction, std::abs(avg - m(r, c)));
      m(r, c) = avg;
      m(c, r) = std::conj(avg);
    }
  const double tr = m.trace().real();
  correction = std::max(correction, std::abs(tr - 1.0));
  if (!(correction <= kMaxHygieneCorrection)) {
    throw NumericalError(std::string(context) + ": state drifted by " + std::to_string(correction) +
                         " (trace " + std::to_string(tr) + "), above the 1e-8 correction limit");
  }
  m *= Complex{1.0 / tr};
  try {
    return DensityMatrix(std::move(m));
  } catch (const DomainError& e) {
    throw NumericalError(std::string(context) + ": " + e.what());
  }
}

std::pair<DensityMatrix, DensityMatrix> collision_step(const DensityMatrix& net, const DensityMatrix& anc,
                                                       const ComplexMatrix& u) {
  if (anc.num_qubits() != 1) throw DomainError("collision_step: ancilla must be a single qubit");
  if (u.dim() != 2 * net.dim()) {
    throw DomainError("collision_step: propagator dimension " + std::to_string(u.dim()) + " does not match " +
                      std::to_string(net.num_qubits()) + " network qubits plus ancilla");
  }
  const ComplexMatrix joint = kernels::conjugate(u, kernels::kron(anc.matrix(), net.matrix()));
  auto [network, ancilla] = marginals(joint, net.num_qubits());
  return {std::move(network), std::move(ancilla)};
}

Trajectory run_protocol(const ProtocolConfig& config) {
  config.validate();
  const ComplexMatrix u = build_propagator(config.spec, config.dt);
  if (!u.is_unitary(tol::kUnitary)) throw NumericalError("run_protocol: propagator is not unitary within 1e-9");

  const std::size_t n_network = config.spec.topology.size();
  const DensityMatrix fresh_ancilla(config.ancilla_init);

  Trajectory traj{config, {}};
  traj.records.reserve(config.steps + 1);
  traj.records.push_back({0, 0.0, DensityMatrix(config.network_init), fresh_ancilla});

  ComplexMatrix joint = kernels::kron(fresh_ancilla.matrix(), traj.records.front().network_state.matrix());
  for (std::size_t n = 1; n <= config.steps; ++n) {
    const StepRecord& prev = traj.records.back();
    const double time = static_cast<double>(n) * config.dt;
    const std::string context = "step " + std::to_string(n);
    switch (config.mode) {
      case ProtocolMode::Collision: {
        auto [net, anc] = collision_step(prev.network_state, fresh_ancilla, u);
        traj.records.push_back({n, time, std::move(net), std::move(anc)});
        break;
      }
      case ProtocolMode::RepeatedInteraction: {
        auto [net, anc] = collision_step(prev.network_state, prev.ancilla_state, u);
        traj.records.push_back({n, time, std::move(net), std::move(anc)});
        break;
      }
      case ProtocolMode::Coherent: {
        joint = restore_state(kernels::conjugate(u, joint), context + " joint state").matrix();
        auto [net, anc] = marginals(joint, n_network);
        traj.records.push_back({n, time, std::move(net), std::move(anc)});
        break;
      }
    }
  }
  return traj;
}

}  // namespace qnet
