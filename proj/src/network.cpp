#include "qnet/network.hpp"

#include <array>
#include <cmath>

#include "qnet/errors.hpp"

namespace qnet {

std::string_view to_string(CouplingKind kind) {
  switch (kind) {
    case CouplingKind::XX: return "xx";
    case CouplingKind::ZZ: return "zz";
    case CouplingKind::Exchange: return "exchange";
  }
  return "?";
}

CouplingKind parse_coupling(std::string_view text) {
  if (text == "xx" || text == "XX") return CouplingKind::XX;
  if (text == "zz" || text == "ZZ") return CouplingKind::ZZ;
  if (text == "exchange" || text == "Exchange") return CouplingKind::Exchange;
  throw DomainError("unknown coupling kind '" + std::string(text) + "' (expected xx, zz or exchange)");
}

Topology::Topology(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0) throw DomainError("topology: at least one network qubit is required");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].size() != n) throw DomainError("topology: adjacency matrix is not square");
    if (rows_[i][i] != 0) throw DomainError("topology: adjacency diagonal must be zero");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (rows_[i][j] != 0 && rows_[i][j] != 1) throw DomainError("topology: adjacency entries must be 0 or 1");
      if (rows_[i][j] != rows_[j][i]) throw DomainError("topology: adjacency matrix is not symmetric");
    }
}

Topology preset_topology(std::string_view name) {
  if (name == "linear3") return Topology({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  if (name == "triangle3") return Topology({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  throw DomainError("unknown topology preset '" + std::string(name) + "' (expected linear3 or triangle3)");
}

void NetworkSpec::validate() const {
  if (target >= topology.size()) {
    throw DomainError("ancilla target " + std::to_string(target) + " is outside the " +
                      std::to_string(topology.size()) + "-qubit network");
  }
  if (!(omega0 >= 0.0) || !std::isfinite(omega0)) throw DomainError("omega0 must be a finite value >= 0");
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError("omega must be a finite value >= 0");
}

ComplexMatrix pair_term(CouplingKind kind, std::size_t i, std::size_t j, std::size_t n_total) {
  if (i == j) throw DomainError("pair_term: qubits must differ");
  if (i >= n_total || j >= n_total) throw DomainError("pair_term: qubit index out of range");

  const auto product = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::array ops{SiteOperator{i, a}, SiteOperator{j, b}};
    return embed_ops(ops, n_total);
  };
  switch (kind) {
    case CouplingKind::XX: return product(pauli::x(), pauli::x());
    case CouplingKind::ZZ: return product(pauli::z(), pauli::z());
    case CouplingKind::Exchange: {
      ComplexMatrix h = product(pauli::raising(), pauli::lowering());
      h += product(pauli::lowering(), pauli::raising());
      return h * Complex{0.5};
    }
  }
  throw DomainError("pair_term: unknown coupling kind");
}

ComplexMatrix build_system_hamiltonian(const NetworkSpec& spec, std::size_t n_total, std::size_t network_offset) {
  const std::size_t n = spec.topology.size();
  if (network_offset + n > n_total) throw DomainError("system Hamiltonian: network does not fit in the register");
  ComplexMatrix h(std::size_t{1} << n_total);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (spec.topology.coupled(i, j)) h += pair_term(spec.system_coupling, i + network_offset, j + network_offset, n_total);
  return h * Complex{spec.omega0};
}

ComplexMatrix build_interaction_hamiltonian(const NetworkSpec& spec, std::size_t n_total,
                                            std::size_t ancilla_index, std::size_t network_offset) {
  const std::size_t n = spec.topology.size();
  if (network_offset + n > n_total) throw DomainError("interaction Hamiltonian: network does not fit in the register");
  if (ancilla_index >= n_total) throw DomainError("interaction Hamiltonian: ancilla index out of range");
  if (ancilla_index >= network_offset && ancilla_index < network_offset + n) {
    throw DomainError("interaction Hamiltonian: ancilla index overlaps the network");
  }
  if (spec.target >= n) throw DomainError("interaction Hamiltonian: target outside the network");
  return pair_term(spec.ancilla_coupling, ancilla_index, spec.target + network_offset, n_total) * Complex{spec.omega};
}

ComplexMatrix build_total_hamiltonian(const NetworkSpec& spec) {
  spec.validate();
  const std::size_t n_total = spec.topology.size() + 1;
  return build_system_hamiltonian(spec, n_total, kNetworkOffset) +
         build_interaction_hamiltonian(spec, n_total, kAncillaIndex, kNetworkOffset);
}

ComplexMatrix build_propagator(const NetworkSpec& spec, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("propagator: dt must be a finite value > 0");
  return expm_hermitian(build_total_hamiltonian(spec), Complex(0.0, -dt));
}

}  // namespace qnet
