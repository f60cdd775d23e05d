#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnet/config.hpp"
#include "qnet/dynamics.hpp"
#include "qnet/metrics.hpp"

namespace qnet {

struct PresetInfo {
  std::string_view name;
  std::string_view description;
  bool modes_equivalent;  // collision and repeated-interaction runs must coincide
};

const std::vector<PresetInfo>& preset_list();

/// Complete configuration for one of fig2, fig3a, fig3b, fig2_cm, fig5, fig6.
ExperimentConfig preset(std::string_view name);

struct ExperimentResult {
  Trajectory trajectory;
  ConcurrenceTable table;
  std::vector<PeakReport> peaks;  // every pair, concurrence descending
};

ExperimentResult run_experiment(const ExperimentConfig& config);

/// Largest |C_a - C_b| over all steps and tracked pairs when the same
/// experiment is run in two protocol modes.
double compare_modes(const ExperimentConfig& config, ProtocolMode a, ProtocolMode b);

enum class SweepAxis { Omega, Dt };
SweepAxis parse_axis(std::string_view name);
std::string_view to_string(SweepAxis axis);

struct SweepRow {
  double value;
  std::vector<std::optional<PeakReport>> top_per_pair;  // highest local maximum per tracked pair
  std::string error;                                     // non-empty when this run failed
};

struct SweepResult {
  std::vector<QubitPair> pairs;
  std::vector<SweepRow> rows;
};

/// One independent run per value, rows in the order given. Runs execute in
/// parallel; a failing run records its error without stopping the others.
SweepResult sweep(const ExperimentConfig& base, SweepAxis axis, const std::vector<double>& values);

void write_csv(std::ostream& os, const ExperimentResult& result);
void write_report(std::ostream& os, const ExperimentConfig& config, const ExperimentResult& result,
                  const std::vector<std::string>& notes = {});
void write_sweep(std::ostream& os, SweepAxis axis, const SweepResult& result);

/// Throw IoError (with the path) when the file cannot be written.
void emit_csv(const ExperimentResult& result, const std::filesystem::path& path);
void emit_report(const ExperimentConfig& config, const ExperimentResult& result, const std::filesystem::path& path,
                 const std::vector<std::string>& notes = {});

}  // namespace qnet
