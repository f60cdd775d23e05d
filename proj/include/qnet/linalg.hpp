#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace qnet {

using Complex = std::complex<double>;

namespace tol {
inline constexpr double kState = 1e-10;     // trace, hermiticity, norm
inline constexpr double kUnitary = 1e-9;    // unitarity / reconstruction
inline constexpr double kPsdSlack = 1e-8;   // smallest admissible eigenvalue is -kPsdSlack
}  // namespace tol

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension. Throws DomainError when dim == 0.
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * dim_ + c];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  Complex trace() const noexcept;

  /// Largest entrywise |a - b|; throws DomainError on dimension mismatch.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_hermitian(double tolerance) const noexcept;
  bool is_unitary(double tolerance) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Normalized pure state of `num_qubits` qubits; qubit 0 is the most significant bit.
class PureState {
 public:
  PureState(std::size_t num_qubits, std::vector<Complex> amplitudes);

  /// Computational basis state from a bitstring such as "010".
  static PureState basis(std::string_view bits);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  ComplexMatrix projector() const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  std::size_t num_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Unit-trace, Hermitian, positive semidefinite matrix on 2^num_qubits dimensions.
class DensityMatrix {
 public:
  /// Validates every invariant; throws DomainError on violation.
  explicit DensityMatrix(ComplexMatrix matrix);
  explicit DensityMatrix(const PureState& state);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  double purity() const;
  double min_eigenvalue() const;

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  std::size_t num_qubits_;
  ComplexMatrix matrix_;
};

/// Number of qubits for a 2^n dimension; throws DomainError if dim is not a power of two.
std::size_t qubits_for_dim(std::size_t dim);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// I^{site} (x) op (x) I^{n-site-1}.
ComplexMatrix embed_single(const ComplexMatrix& op, std::size_t site, std::size_t n);

struct SiteOperator {
  std::size_t site;
  ComplexMatrix op;
};

/// Tensor product with `op` on each listed site and identity elsewhere. Sites must be distinct.
ComplexMatrix embed_ops(std::span<const SiteOperator> ops, std::size_t n);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // eigenvectors as columns
};

HermitianEigen herm_eig(const ComplexMatrix& h);

/// exp(scale * h) for Hermitian h, through its eigendecomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, Complex scale);

/// Traces out the qubits listed in `discard`. Discarding every qubit gives the 1x1 matrix [1].
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> discard);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> discard);

/// All eigenvalues of a general square matrix.
std::vector<Complex> eigvals_general(const ComplexMatrix& m);

/// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
ComplexMatrix raising();   // sigma+ = |0><1|
ComplexMatrix lowering();  // sigma- = |1><0|
}  // namespace pauli

}  // namespace qnet
