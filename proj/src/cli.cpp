#include "qnet/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qnet/errors.hpp"
#include "qnet/runner.hpp"

namespace qnet {

namespace {

namespace fs = std::filesystem;

void write_outputs(const ExperimentConfig& cfg, const ExperimentResult& result, const fs::path& csv,
                   const fs::path& report, const std::vector<std::string>& notes, std::ostream& out) {
  emit_csv(result, csv);
  emit_report(cfg, result, report, notes);
  write_report(out, cfg, result, notes);
  out << "wrote " << csv.string() << " and " << report.string() << '\n';
}

int cmd_run(const std::string& config_file, std::ostream& out) {
  const ExperimentConfig cfg = load_config(config_file);
  const std::string stem = cfg.name.empty() ? fs::path(config_file).stem().string() : cfg.name;
  const fs::path csv = cfg.csv_path.empty() ? fs::path(stem + ".csv") : fs::path(cfg.csv_path);
  const fs::path report = cfg.report_path.empty() ? fs::path(stem + "_peaks.txt") : fs::path(cfg.report_path);
  write_outputs(cfg, run_experiment(cfg), csv, report, {}, out);
  return kExitOk;
}

int cmd_reproduce(const std::string& name, const std::string& out_dir, std::ostream& out) {
  const ExperimentConfig cfg = preset(name);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir, "cannot create output directory: " + ec.message());

  std::vector<std::string> notes;
  bool equivalent = true;
  for (const auto& info : preset_list()) {
    if (info.name != name || !info.modes_equivalent) continue;
    const double gap = compare_modes(cfg, ProtocolMode::Collision, ProtocolMode::RepeatedInteraction);
    equivalent = gap <= 1e-9;
    std::ostringstream note;
    note << "mode_equivalence collision vs repeated: max |dC| = " << gap
         << (equivalent ? " (agree within 1e-9)" : " (DISAGREE beyond 1e-9)");
    notes.push_back(note.str());
  }
  const fs::path dir(out_dir);
  write_outputs(cfg, run_experiment(cfg), dir / (name + ".csv"), dir / (name + "_peaks.txt"), notes, out);
  return equivalent ? kExitOk : kExitNumerical;
}

int cmd_sweep(const std::string& config_file, const std::string& param, const std::vector<double>& values,
              std::ostream& out) {
  const SweepAxis axis = parse_axis(param);
  const ExperimentConfig base = load_config(config_file);
  for (const double v : values) {
    ExperimentConfig probe = base;
    (axis == SweepAxis::Omega ? probe.protocol.spec.omega : probe.protocol.dt) = v;
    probe.validate();
  }
  const SweepResult result = sweep(base, axis, values);
  write_sweep(out, axis, result);
  for (const auto& row : result.rows)
    if (!row.error.empty()) return kExitNumerical;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ancilla-mediated entanglement distribution in qubit networks"};
  app.name("qnet");
  app.require_subcommand(1);

  std::string config_file;
  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", config_file, "Config file (key = value lines)")->required();

  std::string preset_name;
  std::string out_dir = ".";
  auto* reproduce = app.add_subcommand("reproduce", "Run a built-in preset and write <preset>.csv / <preset>_peaks.txt");
  reproduce->add_option("preset", preset_name, "Preset name (see list-presets)")->required();
  reproduce->add_option("--out", out_dir, "Output directory");

  std::string param;
  std::vector<double> values;
  auto* sweep_cmd = app.add_subcommand("sweep", "Repeat a config over several values of one parameter");
  sweep_cmd->add_option("config", config_file, "Config file")->required();
  sweep_cmd->add_option("--param", param, "omega or dt")->required();
  sweep_cmd->add_option("--values", values, "Comma-separated values")->required()->delimiter(',');

  auto* list = app.add_subcommand("list-presets", "List the built-in presets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (run->parsed()) return cmd_run(config_file, out);
    if (reproduce->parsed()) return cmd_reproduce(preset_name, out_dir, out);
    if (sweep_cmd->parsed()) return cmd_sweep(config_file, param, values, out);
    if (list->parsed()) {
      for (const auto& info : preset_list()) out << info.name << "\t" << info.description << '\n';
      return kExitOk;
    }
  } catch (const DomainError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  err << app.help();
  return kExitValidation;
}

}  // namespace qnet
