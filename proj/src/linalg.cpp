#include "qnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qnet/errors.hpp"
#include "qnet/kernels.hpp"

namespace qnet {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> as_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  return {m.data().data(), n, n};
}

std::size_t checked_dim(std::size_t dim) {
  if (dim == 0) throw DomainError("ComplexMatrix: dimension must be at least 1");
  return dim;
}

}  // namespace

// ---- ComplexMatrix -------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(checked_dim(dim)), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(checked_dim(dim)), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw DomainError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                      std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(checked_dim(rows.size())) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DomainError("ComplexMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw DomainError("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tolerance) const noexcept {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tolerance) const {
  return kernels::matmul(*this, adjoint()).max_abs_diff(identity(dim_)) <= tolerance;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw DomainError("matrix addition: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rhs.dim_ != dim_) throw DomainError("matrix subtraction: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return kernels::matmul(a, b); }

// ---- states --------------------------------------------------------------

std::size_t qubits_for_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DomainError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

PureState::PureState(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ >= 8 * sizeof(std::size_t) - 1 || amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
    throw DomainError("PureState: " + std::to_string(amplitudes_.size()) + " amplitudes for " +
                      std::to_string(num_qubits_) + " qubits");
  }
  double norm = 0.0;
  for (const auto& a : amplitudes_) norm += std::norm(a);
  if (std::abs(norm - 1.0) > tol::kState) {
    throw DomainError("PureState: squared norm " + std::to_string(norm) + " differs from 1");
  }
}

PureState PureState::basis(std::string_view bits) {
  std::size_t index = 0;
  for (const char b : bits) {
    if (b != '0' && b != '1') throw DomainError("basis state: invalid bitstring '" + std::string(bits) + "'");
    index = (index << 1) | static_cast<std::size_t>(b == '1');
  }
  std::vector<Complex> amps(std::size_t{1} << bits.size());
  amps[index] = 1.0;
  return PureState(bits.size(), std::move(amps));
}

ComplexMatrix PureState::projector() const {
  ComplexMatrix m(amplitudes_.size());
  for (std::size_t r = 0; r < amplitudes_.size(); ++r)
    for (std::size_t c = 0; c < amplitudes_.size(); ++c) m(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
  return m;
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : num_qubits_(qubits_for_dim(matrix.dim())), matrix_(std::move(matrix)) {
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0}) > tol::kState) {
    throw DomainError("DensityMatrix: trace (" + std::to_string(tr.real()) + ", " +
                      std::to_string(tr.imag()) + ") differs from 1");
  }
  if (!matrix_.is_hermitian(tol::kState)) throw DomainError("DensityMatrix: matrix is not Hermitian");
  const double lowest = min_eigenvalue();
  if (lowest < -tol::kPsdSlack) {
    throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix::DensityMatrix(const PureState& state) : DensityMatrix(state.projector()) {}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  double p = 0.0;
  for (const auto& z : matrix_.data()) p += std::norm(z);
  return p;
}

double DensityMatrix::min_eigenvalue() const {
  if (matrix_.dim() == 1) return matrix_(0, 0).real();
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(as_eigen(matrix_), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("DensityMatrix: eigenvalue solver failed");
  return solver.eigenvalues().minCoeff();
}

// ---- operations ----------------------------------------------------------

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) { return kernels::kron(a, b); }

ComplexMatrix embed_ops(std::span<const SiteOperator> ops, std::size_t n) {
  std::vector<const ComplexMatrix*> factors(n, nullptr);
  for (const auto& [site, op] : ops) {
    if (site >= n) {
      throw DomainError("embed: site " + std::to_string(site) + " out of range for " + std::to_string(n) +
                        " qubits");
    }
    if (op.dim() != 2) throw DomainError("embed: single-qubit operator must be 2x2");
    if (factors[site] != nullptr) throw DomainError("embed: site " + std::to_string(site) + " listed twice");
    factors[site] = &op;
  }
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (const auto* f : factors) out = kernels::kron(out, f != nullptr ? *f : id);
  return out;
}

ComplexMatrix embed_single(const ComplexMatrix& op, std::size_t site, std::size_t n) {
  const SiteOperator single{site, op};
  return embed_ops(std::span(&single, 1), n);
}

HermitianEigen herm_eig(const ComplexMatrix& h) {
  if (!h.is_hermitian(tol::kState)) throw DomainError("herm_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(as_eigen(h));
  if (solver.info() != Eigen::Success) throw NumericalError("herm_eig: eigen solver did not converge");

  const std::size_t n = h.dim();
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) out.values[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  const auto& vecs = solver.eigenvectors();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.vectors(r, c) = vecs(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, Complex scale) {
  const auto [values, vectors] = herm_eig(h);
  const std::size_t n = h.dim();
  // V * diag(exp(scale * lambda)) * V^dagger
  ComplexMatrix scaled = vectors;
  for (std::size_t c = 0; c < n; ++c) {
    const Complex phase = std::exp(scale * values[c]);
    for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= phase;
  }
  return kernels::matmul(scaled, vectors.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> discard) {
  const std::size_t n = rho.num_qubits();
  std::size_t mask = 0;
  for (const std::size_t q : discard) {
    if (q >= n) {
      throw DomainError("partial_trace: qubit " + std::to_string(q) + " out of range for " + std::to_string(n) +
                        " qubits");
    }
    if ((mask >> q) & 1U) throw DomainError("partial_trace: qubit " + std::to_string(q) + " listed twice");
    mask |= std::size_t{1} << q;
  }
  return DensityMatrix(kernels::partial_trace(rho.matrix(), n, mask));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> discard) {
  return partial_trace(rho, std::span(discard.begin(), discard.size()));
}

std::vector<Complex> eigvals_general(const ComplexMatrix& m) {
  if (m.dim() == 1) return {m(0, 0)};
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
  solver.compute(Eigen::MatrixXcd(as_eigen(m)), false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigvals_general: QR iteration did not converge for a " + std::to_string(m.dim()) + "x" +
                         std::to_string(m.dim()) + " matrix");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Eigen::MatrixXcd(as_eigen(m)));
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

namespace pauli {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
ComplexMatrix raising() { return {{0.0, 1.0}, {0.0, 0.0}}; }
ComplexMatrix lowering() { return {{0.0, 0.0}, {1.0, 0.0}}; }
}  // namespace pauli

}  // namespace qnet
