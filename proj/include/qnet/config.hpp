#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qnet/dynamics.hpp"
#include "qnet/metrics.hpp"

namespace qnet {

struct ExperimentConfig {
  std::string name;  // used for default output file names
  ProtocolConfig protocol;
  std::vector<QubitPair> tracked_pairs;  // empty means every network pair
  std::string csv_path;
  std::string report_path;
  double peak_min_height = 0.9;

  /// Tracked pairs in CSV column order (lexicographic by label).
  std::vector<QubitPair> effective_pairs() const;
  void validate() const;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Config documents are line-oriented `key = value` pairs; '#' starts a comment.
//
//   name = fig2
//   topology = triangle3            # or linear3, or adjacency rows "011;101;110"
//   system_coupling = xx            # xx | zz | exchange
//   omega0 = 1
//   ancilla_coupling = zz
//   omega = 5
//   target = A                      # network qubit letter or 0-based index
//   mode = coherent                 # collision | repeated | coherent
//   dt = 0.4
//   steps = 80
//   ancilla_init = +                # 0, 1, +, -, +i, -i, or "re:im, re:im"
//   network_init = 000
//   tracked_pairs = all             # or "AB, BC"
//   peak_min_height = 0.9
//   csv_path = fig2.csv
//   report_path = fig2_peaks.txt

/// Throws DomainError naming the offending line for malformed or invalid documents.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const ExperimentConfig& config);

PureState parse_ket(std::string_view text);
std::string format_ket(const PureState& state);

}  // namespace qnet
