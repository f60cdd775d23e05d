#pragma once

// Dense kernels behind the linalg operations. The top-level functions are
// OpenMP-parallel over output rows once the dimension reaches
// kParallelMinDim; `reference::` holds the plain serial versions that the
// tests and the benchmark compare against.

#include <cstddef>
#include <span>

#include "qnet/linalg.hpp"

namespace qnet::kernels {

inline constexpr std::size_t kParallelMinDim = 64;

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// u * rho * u^dagger
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho);

/// Partial trace over the qubits whose bit is set in `discard_mask`
/// (bit q of the mask refers to qubit q, qubit 0 being the most significant).
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t num_qubits,
                            std::size_t discard_mask);

namespace reference {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho);
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t num_qubits,
                            std::size_t discard_mask);
}  // namespace reference

}  // namespace qnet::kernels
