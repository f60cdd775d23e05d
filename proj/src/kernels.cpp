#include "qnet/kernels.hpp"

#include <vector>

#include "qnet/errors.hpp"

namespace qnet::kernels {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_qubit_count(const ComplexMatrix& rho, std::size_t num_qubits) {
  if (num_qubits >= 8 * sizeof(std::size_t) || (std::size_t{1} << num_qubits) != rho.dim()) {
    throw DomainError("partial_trace: matrix dimension " + std::to_string(rho.dim()) +
                      " does not match " + std::to_string(num_qubits) + " qubits");
  }
}

// Basis-index bit position of qubit q in an n-qubit register.
constexpr std::size_t bit_of(std::size_t q, std::size_t n) { return n - 1 - q; }

// For every value of the local index over `qubits` (first listed qubit is the
// most significant local bit), the corresponding full-register offset.
std::vector<std::size_t> scatter_table(const std::vector<std::size_t>& qubits, std::size_t n) {
  const std::size_t count = std::size_t{1} << qubits.size();
  std::vector<std::size_t> table(count, 0);
  for (std::size_t local = 0; local < count; ++local) {
    std::size_t full = 0;
    for (std::size_t t = 0; t < qubits.size(); ++t) {
      if ((local >> (qubits.size() - 1 - t)) & 1U) full |= std::size_t{1} << bit_of(qubits[t], n);
    }
    table[local] = full;
  }
  return table;
}

}  // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  const auto lhs = a.data();
  const auto rhs = b.data();
  auto out = c.data();
  const long long rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
  for (long long i = 0; i < rows; ++i) {
    // Plain real arithmetic on the interleaved (re, im) layout vectorizes;
    // std::complex operator* goes through the NaN-checking library routine.
    double* crow = reinterpret_cast<double*>(out.data() + static_cast<std::size_t>(i) * n);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = lhs[static_cast<std::size_t>(i) * n + k];
      if (aik == Complex{}) continue;
      const double ar = aik.real();
      const double ai = aik.imag();
      const double* brow = reinterpret_cast<const double*>(rhs.data() + k * n);
      for (std::size_t j = 0; j < 2 * n; j += 2) {
        crow[j] += ar * brow[j] - ai * brow[j + 1];
        crow[j + 1] += ar * brow[j + 1] + ai * brow[j];
      }
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t n = da * db;
  ComplexMatrix c(n);
  const long long rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelMinDim)
  for (long long r = 0; r < rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r) / db;
    const std::size_t k = static_cast<std::size_t>(r) % db;
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t l = 0; l < db; ++l) c(static_cast<std::size_t>(r), j * db + l) = aij * b(k, l);
    }
  }
  return c;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) {
  require_same_dim(u, rho, "conjugate");
  return matmul(matmul(u, rho), u.adjoint());
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t num_qubits,
                            std::size_t discard_mask) {
  require_qubit_count(rho, num_qubits);
  std::vector<std::size_t> keep;
  std::vector<std::size_t> drop;
  for (std::size_t q = 0; q < num_qubits; ++q) ((discard_mask >> q) & 1U ? drop : keep).push_back(q);

  const auto keep_off = scatter_table(keep, num_qubits);
  const auto drop_off = scatter_table(drop, num_qubits);
  const std::size_t out_dim = keep_off.size();
  ComplexMatrix out(out_dim);
  const long long rows = static_cast<long long>(out_dim);
#pragma omp parallel for schedule(static) if (rho.dim() >= kParallelMinDim)
  for (long long i = 0; i < rows; ++i) {
    const std::size_t ri = keep_off[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < out_dim; ++j) {
      const std::size_t cj = keep_off[j];
      Complex acc{};
      for (const std::size_t m : drop_off) acc += rho(ri | m, cj | m);
      out(static_cast<std::size_t>(i), j) = acc;
    }
  }
  return out;
}

namespace reference {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t db = b.dim();
  ComplexMatrix c(a.dim() * db);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) c(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return c;
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) {
  require_same_dim(u, rho, "conjugate");
  return matmul(matmul(u, rho), u.adjoint());
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t num_qubits,
                            std::size_t discard_mask) {
  require_qubit_count(rho, num_qubits);
  std::size_t drop_bits = 0;
  std::size_t kept = 0;
  for (std::size_t q = 0; q < num_qubits; ++q) {
    if ((discard_mask >> q) & 1U) {
      drop_bits |= std::size_t{1} << bit_of(q, num_qubits);
    } else {
      ++kept;
    }
  }
  // Packs the kept bits of a full index, preserving their order.
  const auto compress = [&](std::size_t full) {
    std::size_t local = 0;
    for (std::size_t q = 0; q < num_qubits; ++q) {
      if ((discard_mask >> q) & 1U) continue;
      local = (local << 1) | ((full >> bit_of(q, num_qubits)) & 1U);
    }
    return local;
  };
  ComplexMatrix out(std::size_t{1} << kept);
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = 0; c < rho.dim(); ++c)
      if ((r & drop_bits) == (c & drop_bits)) out(compress(r), compress(c)) += rho(r, c);
  return out;
}

}  // namespace reference

}  // namespace qnet::kernels
