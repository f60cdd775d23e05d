#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qnet/linalg.hpp"

namespace qnet {

enum class CouplingKind { XX, ZZ, Exchange };

std::string_view to_string(CouplingKind kind);
CouplingKind parse_coupling(std::string_view text);

/// Symmetric 0/1 adjacency over the network qubits, zero diagonal.
class Topology {
 public:
  /// Throws DomainError unless `rows` is square, symmetric, 0/1 and zero on the diagonal.
  explicit Topology(std::vector<std::vector<int>> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  bool coupled(std::size_t i, std::size_t j) const { return rows_.at(i).at(j) != 0; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// "linear3" (A-B-C chain) or "triangle3" (closed loop).
Topology preset_topology(std::string_view name);

struct NetworkSpec {
  Topology topology = preset_topology("linear3");
  CouplingKind system_coupling = CouplingKind::XX;
  double omega0 = 1.0;
  CouplingKind ancilla_coupling = CouplingKind::ZZ;
  double omega = 0.0;
  std::size_t target = 0;  // network qubit the ancilla couples to

  void validate() const;
  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

/// Register layout shared by every module: the ancilla is qubit 0 and the
/// network occupies qubits 1..n.
inline constexpr std::size_t kAncillaIndex = 0;
inline constexpr std::size_t kNetworkOffset = 1;

/// h_ij embedded into n_total qubits: sx sx, sz sz, or (s+ s- + s- s+)/2.
ComplexMatrix pair_term(CouplingKind kind, std::size_t i, std::size_t j, std::size_t n_total);

/// omega0 * sum_{i<j} eps_ij h_ij over the network qubits starting at network_offset.
ComplexMatrix build_system_hamiltonian(const NetworkSpec& spec, std::size_t n_total, std::size_t network_offset);

/// omega * h_{ancilla, target}.
ComplexMatrix build_interaction_hamiltonian(const NetworkSpec& spec, std::size_t n_total,
                                            std::size_t ancilla_index, std::size_t network_offset);

/// H_S + H_int on the full register.
ComplexMatrix build_total_hamiltonian(const NetworkSpec& spec);

/// exp(-i (H_S + H_int) dt) on the 2^(1+n) register.
ComplexMatrix build_propagator(const NetworkSpec& spec, double dt);

}  // namespace qnet
