#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qnet/dynamics.hpp"
#include "qnet/linalg.hpp"

namespace qnet {

/// Two distinct network qubits, first < second.
class QubitPair {
 public:
  QubitPair(std::size_t a, std::size_t b);

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }
  /// "AB", "AC", ... for the first 26 qubits.
  std::string label() const;

  friend bool operator==(const QubitPair&, const QubitPair&) = default;
  friend auto operator<=>(const QubitPair&, const QubitPair&) = default;

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Letter label of a network qubit (A, B, ...), or "q<i>" beyond Z.
std::string qubit_label(std::size_t index);

/// Every pair of an n-qubit network in lexicographic order.
std::vector<QubitPair> all_pairs(std::size_t n);

enum class BellLabel {
  PhiTildePlus,
  PhiTildeMinus,
  PhiPlus,
  PhiMinus,
  PsiPlus,
  PsiMinus,
  PsiTildePlus,
  PsiTildeMinus,
  PMinus,
};

std::string_view to_string(BellLabel label);

struct BellTarget {
  BellLabel label;
  PureState state;
};

/// Nine maximally entangled two-qubit targets in fixed order:
/// (|00> +- i|11>)/sqrt2, (|00> +- |11>)/sqrt2, (|01> +- |10>)/sqrt2,
/// (|01> +- i|10>)/sqrt2, and p- = (Phi- - i Psi-)/sqrt2.
const std::vector<BellTarget>& bell_catalog();
const BellTarget& bell_target(BellLabel label);

/// (sy (x) sy) rho* (sy (x) sy)
ComplexMatrix spin_flip(const DensityMatrix& rho);

/// Wootters concurrence from the spectrum of rho * spin_flip(rho).
double concurrence(const DensityMatrix& rho);

/// <phi| rho |phi>
double fidelity(const DensityMatrix& rho, const PureState& target);

struct ConcurrenceTable {
  std::vector<QubitPair> pairs;
  std::vector<std::vector<double>> rows;  // rows[step][pair]

  std::vector<double> series(std::size_t pair_index) const;
};

/// Reduced two-qubit state of `pair` from an n-qubit network state.
DensityMatrix pair_state(const DensityMatrix& network, const QubitPair& pair);

ConcurrenceTable pair_concurrences(const Trajectory& trajectory, const std::vector<QubitPair>& pairs);
ConcurrenceTable pair_concurrences(const Trajectory& trajectory);

struct Peak {
  std::size_t n;
  double value;
  friend bool operator==(const Peak&, const Peak&) = default;
};

/// Local maxima (a flat run counts once, at its first index) with value >=
/// min_height, ordered by value descending then index ascending.
std::vector<Peak> find_peaks(const std::vector<double>& series, double min_height);

struct PeakState {
  BellLabel best;
  double fidelity;
};

/// Best-matching catalog entry by fidelity; near-ties (1e-9) go to the earlier entry.
PeakState characterize_peak(const DensityMatrix& rho_pair);

struct PeakReport {
  QubitPair pair;
  std::size_t n;
  double concurrence;
  BellLabel best_target;
  double fidelity;
};

}  // namespace qnet
