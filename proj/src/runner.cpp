#include "qnet/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "qnet/errors.hpp"

namespace qnet {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ExperimentConfig make_preset(std::string_view name, std::string_view topology, CouplingKind system,
                             CouplingKind ancilla, double omega, std::size_t target, ProtocolMode mode,
                             std::string_view ket, std::size_t steps) {
  ExperimentConfig cfg;
  cfg.name = std::string(name);
  auto& p = cfg.protocol;
  p.spec = NetworkSpec{preset_topology(topology), system, 1.0, ancilla, omega, target};
  p.mode = mode;
  p.dt = 0.4;
  p.steps = steps;
  p.ancilla_init = parse_ket(ket);
  p.network_init = PureState::basis("000");
  cfg.peak_min_height = 0.9;
  return cfg;
}

// Rethrows with the experiment name in front of the message, keeping the error category.
template <typename Fn>
auto with_context(const ExperimentConfig& config, Fn&& fn) {
  const std::string where = config.name.empty() ? "experiment" : "experiment '" + config.name + "'";
  try {
    return fn();
  } catch (const DomainError& e) {
    throw DomainError(where + ": " + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError(where + ": " + e.what());
  }
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace

const std::vector<PresetInfo>& preset_list() {
  static const std::vector<PresetInfo> list{
      {"fig2", "triangle, XX network, ZZ ancilla on A, omega=5, coherent ancilla carry-over", false},
      {"fig3a", "linear chain, XX network, ZZ ancilla on A, omega=5, coherent ancilla carry-over", false},
      {"fig3b", "linear chain, XX network, ZZ ancilla on A, omega=10, collision model (reset)", false},
      {"fig2_cm", "triangle, XX network, ZZ ancilla on A, omega=12, collision model (reset)", false},
      {"fig5", "linear chain, XX network, ZZ ancilla on B, ancilla |1>, repeated interactions", true},
      {"fig6", "linear chain, exchange network, XX ancilla on A, omega=5, repeated interactions", true},
  };
  return list;
}

ExperimentConfig preset(std::string_view name) {
  using enum CouplingKind;
  if (name == "fig2") return make_preset(name, "triangle3", XX, ZZ, 5.0, 0, ProtocolMode::Coherent, "+", 80);
  if (name == "fig3a") return make_preset(name, "linear3", XX, ZZ, 5.0, 0, ProtocolMode::Coherent, "+", 150);
  if (name == "fig3b") return make_preset(name, "linear3", XX, ZZ, 10.0, 0, ProtocolMode::Collision, "+", 120);
  if (name == "fig2_cm") return make_preset(name, "triangle3", XX, ZZ, 12.0, 0, ProtocolMode::Collision, "+", 60);
  if (name == "fig5") {
    return make_preset(name, "linear3", XX, ZZ, 5.0, 1, ProtocolMode::RepeatedInteraction, "1", 80);
  }
  if (name == "fig6") {
    return make_preset(name, "linear3", Exchange, XX, 5.0, 0, ProtocolMode::RepeatedInteraction, "+", 220);
  }
  throw DomainError("unknown preset '" + std::string(name) + "' (see list-presets)");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  return with_context(config, [&] {
    config.validate();
    ExperimentResult result{run_protocol(config.protocol), {}, {}};
    result.table = pair_concurrences(result.trajectory, config.effective_pairs());

    for (std::size_t k = 0; k < result.table.pairs.size(); ++k) {
      const QubitPair& pair = result.table.pairs[k];
      for (const Peak& peak : find_peaks(result.table.series(k), config.peak_min_height)) {
        const auto state = characterize_peak(pair_state(result.trajectory.records[peak.n].network_state, pair));
        result.peaks.push_back({pair, peak.n, peak.value, state.best, state.fidelity});
      }
    }
    std::stable_sort(result.peaks.begin(), result.peaks.end(),
                     [](const PeakReport& a, const PeakReport& b) { return a.concurrence > b.concurrence; });
    return result;
  });
}

double compare_modes(const ExperimentConfig& config, ProtocolMode a, ProtocolMode b) {
  ExperimentConfig first = config;
  ExperimentConfig second = config;
  first.protocol.mode = a;
  second.protocol.mode = b;
  const auto ta = run_experiment(first).table;
  const auto tb = run_experiment(second).table;
  double worst = 0.0;
  for (std::size_t r = 0; r < ta.rows.size(); ++r)
    for (std::size_t c = 0; c < ta.rows[r].size(); ++c) worst = std::max(worst, std::abs(ta.rows[r][c] - tb.rows[r][c]));
  return worst;
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "omega") return SweepAxis::Omega;
  if (name == "dt") return SweepAxis::Dt;
  throw DomainError("unknown sweep parameter '" + std::string(name) + "' (expected omega or dt)");
}

std::string_view to_string(SweepAxis axis) { return axis == SweepAxis::Omega ? "omega" : "dt"; }

SweepResult sweep(const ExperimentConfig& base, SweepAxis axis, const std::vector<double>& values) {
  if (values.empty()) throw DomainError("sweep: no parameter values given");
  base.validate();
  SweepResult result{base.effective_pairs(), std::vector<SweepRow>(values.size())};

  const long long count = static_cast<long long>(values.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    SweepRow& row = result.rows[static_cast<std::size_t>(i)];
    row.value = values[static_cast<std::size_t>(i)];
    row.top_per_pair.assign(result.pairs.size(), std::nullopt);
    try {
      ExperimentConfig cfg = base;
      (axis == SweepAxis::Omega ? cfg.protocol.spec.omega : cfg.protocol.dt) = row.value;
      cfg.peak_min_height = std::numeric_limits<double>::lowest();
      const auto run = run_experiment(cfg);
      for (const auto& peak : run.peaks) {
        const auto k = static_cast<std::size_t>(
            std::find(result.pairs.begin(), result.pairs.end(), peak.pair) - result.pairs.begin());
        if (!row.top_per_pair[k]) row.top_per_pair[k] = peak;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  return result;
}

void write_csv(std::ostream& os, const ExperimentResult& result) {
  os << "step,time";
  for (const auto& p : result.table.pairs) os << ",C_" << p.label();
  os << ",ancilla_purity\n";
  for (std::size_t r = 0; r < result.trajectory.records.size(); ++r) {
    const auto& rec = result.trajectory.records[r];
    os << rec.n << ',' << fmt12(rec.time);
    for (const double c : result.table.rows[r]) os << ',' << fmt12(c);
    os << ',' << fmt12(rec.ancilla_state.purity()) << '\n';
  }
}

void write_report(std::ostream& os, const ExperimentConfig& config, const ExperimentResult& result,
                  const std::vector<std::string>& notes) {
  const auto& p = config.protocol;
  os << "# peak report" << (config.name.empty() ? "" : ": " + config.name) << '\n';
  os << "# mode=" << to_string(p.mode) << " system=" << to_string(p.spec.system_coupling)
     << " ancilla=" << to_string(p.spec.ancilla_coupling) << "@" << qubit_label(p.spec.target)
     << " omega0=" << fmt12(p.spec.omega0) << " omega=" << fmt12(p.spec.omega) << " dt=" << fmt12(p.dt)
     << " steps=" << p.steps << " min_height=" << fmt12(config.peak_min_height) << '\n';
  os << "n,pair,concurrence,best_target,fidelity\n";
  for (const auto& peak : result.peaks) {
    os << peak.n << ',' << peak.pair.label() << ',' << fmt12(peak.concurrence) << ',' << to_string(peak.best_target)
       << ',' << fmt12(peak.fidelity) << '\n';
  }
  for (const auto& note : notes) os << "# " << note << '\n';
}

void write_sweep(std::ostream& os, SweepAxis axis, const SweepResult& result) {
  os << to_string(axis);
  for (const auto& p : result.pairs) os << ",peak_n_" << p.label() << ",peak_C_" << p.label();
  os << ",error\n";
  for (const auto& row : result.rows) {
    os << fmt12(row.value);
    for (const auto& top : row.top_per_pair) {
      if (top) {
        os << ',' << top->n << ',' << fmt12(top->concurrence);
      } else {
        os << ",,";
      }
    }
    std::string error = row.error;
    std::replace_if(error.begin(), error.end(), [](char c) { return c == ',' || c == '\n' || c == '\r'; }, ';');
    os << ',' << error << '\n';
  }
}

void emit_csv(const ExperimentResult& result, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& os) { write_csv(os, result); });
}

void emit_report(const ExperimentConfig& config, const ExperimentResult& result, const std::filesystem::path& path,
                 const std::vector<std::string>& notes) {
  write_file(path, [&](std::ostream& os) { write_report(os, config, result, notes); });
}

}  // namespace qnet
