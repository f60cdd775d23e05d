#include "qnet/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "qnet/errors.hpp"
#include "qnet/kernels.hpp"

namespace qnet {

namespace {

inline constexpr double kSpectrumSlack = 1e-8;
inline constexpr double kRangeSlack = 1e-9;
inline constexpr double kTieTolerance = 1e-9;

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  if (rho.num_qubits() != 2) {
    throw DomainError(std::string(what) + ": expected a 2-qubit state, got " + std::to_string(rho.num_qubits()) +
                      " qubits");
  }
}

PureState two_qubit(Complex a00, Complex a01, Complex a10, Complex a11) {
  return PureState(2, {a00, a01, a10, a11});
}

std::vector<BellTarget> make_catalog() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  // p- = (Phi- - i Psi-)/sqrt2 = (|00> - i|01> + i|10> - |11>)/2
  return {
      {BellLabel::PhiTildePlus, two_qubit(s, 0.0, 0.0, i * s)},
      {BellLabel::PhiTildeMinus, two_qubit(s, 0.0, 0.0, -i * s)},
      {BellLabel::PhiPlus, two_qubit(s, 0.0, 0.0, s)},
      {BellLabel::PhiMinus, two_qubit(s, 0.0, 0.0, -s)},
      {BellLabel::PsiPlus, two_qubit(0.0, s, s, 0.0)},
      {BellLabel::PsiMinus, two_qubit(0.0, s, -s, 0.0)},
      {BellLabel::PsiTildePlus, two_qubit(0.0, s, i * s, 0.0)},
      {BellLabel::PsiTildeMinus, two_qubit(0.0, s, -i * s, 0.0)},
      {BellLabel::PMinus, two_qubit(0.5, -0.5 * i, 0.5 * i, -0.5)},
  };
}

}  // namespace

QubitPair::QubitPair(std::size_t a, std::size_t b) : first_(std::min(a, b)), second_(std::max(a, b)) {
  if (a == b) throw DomainError("qubit pair needs two distinct qubits");
}

std::string qubit_label(std::size_t index) {
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "q" + std::to_string(index);
}

std::string QubitPair::label() const { return qubit_label(first_) + qubit_label(second_); }

std::vector<QubitPair> all_pairs(std::size_t n) {
  std::vector<QubitPair> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiTildePlus: return "PhiTilde+";
    case BellLabel::PhiTildeMinus: return "PhiTilde-";
    case BellLabel::PhiPlus: return "Phi+";
    case BellLabel::PhiMinus: return "Phi-";
    case BellLabel::PsiPlus: return "Psi+";
    case BellLabel::PsiMinus: return "Psi-";
    case BellLabel::PsiTildePlus: return "PsiTilde+";
    case BellLabel::PsiTildeMinus: return "PsiTilde-";
    case BellLabel::PMinus: return "p-";
  }
  return "?";
}

const std::vector<BellTarget>& bell_catalog() {
  static const std::vector<BellTarget> catalog = make_catalog();
  return catalog;
}

const BellTarget& bell_target(BellLabel label) {
  for (const auto& t : bell_catalog())
    if (t.label == label) return t;
  throw DomainError("unknown Bell label");
}

ComplexMatrix spin_flip(const DensityMatrix& rho) {
  require_two_qubits(rho, "spin_flip");
  static const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  return kernels::conjugate(yy, rho.matrix().conj());
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence");
  for (const Complex& ev : eigvals_general(kernels::matmul(rho.matrix(), spin_flip(rho)))) {
    if (std::abs(ev.imag()) >= kSpectrumSlack || ev.real() < -kSpectrumSlack) {
      throw NumericalError("concurrence: eigenvalue (" + std::to_string(ev.real()) + ", " + std::to_string(ev.imag()) +
                           ") of rho*rho~ is outside the admissible range");
    }
  }

  // The square roots of that spectrum are the singular values of
  // tau = W^T (sy x sy) W for any rho = W W^dagger. Taking them from an SVD
  // keeps roundoff-level eigenvalues at ~1e-16 instead of their ~1e-8 roots.
  static const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  auto [lambda, w] = herm_eig(rho.matrix());
  for (std::size_t c = 0; c < 4; ++c) {
    const double s = std::sqrt(std::max(lambda[c], 0.0));
    for (std::size_t r = 0; r < 4; ++r) w(r, c) *= s;
  }
  const ComplexMatrix tau = kernels::matmul(kernels::matmul(w.adjoint().conj(), yy), w);
  const auto mu = singular_values(tau);

  const double c = std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
  if (c > 1.0 + kRangeSlack) throw NumericalError("concurrence: value " + std::to_string(c) + " exceeds 1");
  return c;
}

double fidelity(const DensityMatrix& rho, const PureState& target) {
  if (rho.num_qubits() != target.num_qubits()) throw DomainError("fidelity: state and target sizes differ");
  const auto phi = target.amplitudes();
  const auto& m = rho.matrix();
  Complex f{};
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) f += std::conj(phi[r]) * m(r, c) * phi[c];
  if (std::abs(f.imag()) >= tol::kState) throw NumericalError("fidelity: overlap has an imaginary residue");
  if (f.real() < -kRangeSlack || f.real() > 1.0 + kRangeSlack) {
    throw NumericalError("fidelity: value " + std::to_string(f.real()) + " outside [0, 1]");
  }
  return f.real();
}

std::vector<double> ConcurrenceTable::series(std::size_t pair_index) const {
  if (pair_index >= pairs.size()) {
    throw DomainError("series: pair index " + std::to_string(pair_index) + " out of range");
  }
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[pair_index]);
  return out;
}

DensityMatrix pair_state(const DensityMatrix& network, const QubitPair& pair) {
  if (pair.second() >= network.num_qubits()) throw DomainError("pair " + pair.label() + " is outside the network");
  std::vector<std::size_t> discard;
  for (std::size_t q = 0; q < network.num_qubits(); ++q)
    if (q != pair.first() && q != pair.second()) discard.push_back(q);
  return partial_trace(network, discard);
}

ConcurrenceTable pair_concurrences(const Trajectory& trajectory, const std::vector<QubitPair>& pairs) {
  ConcurrenceTable table{pairs, {}};
  table.rows.reserve(trajectory.records.size());
  for (const auto& rec : trajectory.records) {
    auto& row = table.rows.emplace_back();
    row.reserve(pairs.size());
    for (const auto& p : pairs) row.push_back(concurrence(pair_state(rec.network_state, p)));
  }
  return table;
}

ConcurrenceTable pair_concurrences(const Trajectory& trajectory) {
  return pair_concurrences(trajectory, all_pairs(trajectory.config.spec.topology.size()));
}

std::vector<Peak> find_peaks(const std::vector<double>& series, double min_height) {
  std::vector<Peak> peaks;
  std::size_t i = 1;
  while (i + 1 < series.size()) {
    // extend over a flat run starting at i
    std::size_t end = i;
    while (end + 1 < series.size() && series[end + 1] == series[i]) ++end;
    if (end + 1 >= series.size()) break;
    if (series[i] > series[i - 1] && series[i] > series[end + 1] && series[i] >= min_height) {
      peaks.push_back({i, series[i]});
    }
    i = end + 1;
  }
  std::stable_sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) { return a.value > b.value; });
  return peaks;
}

PeakState characterize_peak(const DensityMatrix& rho_pair) {
  require_two_qubits(rho_pair, "characterize_peak");
  const auto& catalog = bell_catalog();
  PeakState best{catalog.front().label, fidelity(rho_pair, catalog.front().state)};
  for (std::size_t k = 1; k < catalog.size(); ++k) {
    const double f = fidelity(rho_pair, catalog[k].state);
    if (f > best.fidelity + kTieTolerance) best = {catalog[k].label, f};
  }
  return best;
}

}  // namespace qnet
