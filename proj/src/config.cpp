#include "qnet/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qnet/errors.hpp"

namespace qnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(std::string_view text, std::string_view key) {
  double value = 0.0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw DomainError(std::string(key) + ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

std::size_t parse_count(std::string_view text, std::string_view key) {
  std::size_t value = 0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw DomainError(std::string(key) + ": '" + std::string(text) + "' is not a non-negative integer");
  }
  return value;
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

Topology parse_topology(std::string_view text) {
  if (text == "linear3" || text == "triangle3") return preset_topology(text);
  std::vector<std::vector<int>> rows;
  for (const auto row : split(text, ';')) {
    auto& out = rows.emplace_back();
    for (const char c : row) {
      if (c == ' ') continue;
      if (c != '0' && c != '1') throw DomainError("topology: expected linear3, triangle3 or 0/1 adjacency rows");
      out.push_back(c - '0');
    }
  }
  return Topology(std::move(rows));
}

std::string format_topology(const Topology& t) {
  if (t == preset_topology("linear3")) return "linear3";
  if (t == preset_topology("triangle3")) return "triangle3";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ';';
    for (const int v : t.rows()[i]) out += static_cast<char>('0' + v);
  }
  return out;
}

// Network qubit by letter (A, B, ...) or 0-based index.
std::size_t parse_qubit(std::string_view text) {
  if (text.size() == 1 && text[0] >= 'A' && text[0] <= 'Z') return static_cast<std::size_t>(text[0] - 'A');
  return parse_count(text, "qubit");
}

std::vector<QubitPair> parse_pairs(std::string_view text, std::size_t n_network) {
  if (text == "all") return {};
  std::vector<QubitPair> pairs;
  for (const auto item : split(text, ',')) {
    if (item.size() != 2) {
      throw DomainError("tracked_pairs: '" + std::string(item) + "' is not a pair of qubit letters such as AB");
    }
    for (const char c : item) {
      if (c == '1') throw DomainError("tracked_pairs: '" + std::string(item) + "' references the ancilla");
      if (c < 'A' || static_cast<std::size_t>(c - 'A') >= n_network) {
        throw DomainError("tracked_pairs: '" + std::string(item) + "' references a qubit outside the network");
      }
    }
    pairs.emplace_back(static_cast<std::size_t>(item[0] - 'A'), static_cast<std::size_t>(item[1] - 'A'));
  }
  return pairs;
}

const std::vector<std::string_view>& known_keys() {
  static const std::vector<std::string_view> keys{
      "name",   "topology", "system_coupling", "omega0",       "ancilla_coupling", "omega",
      "target", "mode",     "dt",              "steps",        "ancilla_init",     "network_init",
      "tracked_pairs",      "peak_min_height", "csv_path",     "report_path"};
  return keys;
}

}  // namespace

std::vector<QubitPair> ExperimentConfig::effective_pairs() const {
  auto pairs = tracked_pairs.empty() ? all_pairs(protocol.spec.topology.size()) : tracked_pairs;
  std::sort(pairs.begin(), pairs.end(), [](const QubitPair& a, const QubitPair& b) { return a.label() < b.label(); });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

void ExperimentConfig::validate() const {
  protocol.validate();
  const std::size_t n = protocol.spec.topology.size();
  for (const auto& p : tracked_pairs) {
    if (p.second() >= n) throw DomainError("tracked pair " + p.label() + " is outside the network");
  }
  if (!std::isfinite(peak_min_height)) throw DomainError("peak_min_height must be finite");
}

PureState parse_ket(std::string_view text) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  if (text == "0") return PureState(1, {1.0, 0.0});
  if (text == "1") return PureState(1, {0.0, 1.0});
  if (text == "+") return PureState(1, {s, s});
  if (text == "-") return PureState(1, {s, -s});
  if (text == "+i") return PureState(1, {s, i * s});
  if (text == "-i") return PureState(1, {s, -i * s});
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw DomainError("ancilla_init: expected 0, 1, +, -, +i, -i or an amplitude pair 're:im, re:im'");
  }
  std::vector<Complex> amps;
  for (const auto part : parts) {
    const auto colon = part.find(':');
    if (colon == std::string_view::npos) {
      amps.emplace_back(parse_real(part, "ancilla_init"), 0.0);
    } else {
      amps.emplace_back(parse_real(part.substr(0, colon), "ancilla_init"),
                        parse_real(part.substr(colon + 1), "ancilla_init"));
    }
  }
  return PureState(1, std::move(amps));
}

std::string format_ket(const PureState& state) {
  if (state.num_qubits() == 1) {
    for (const char* name : {"0", "1", "+", "-", "+i", "-i"})
      if (parse_ket(name) == state) return name;
  }
  std::string out;
  for (const auto& a : state.amplitudes()) {
    if (!out.empty()) out += ", ";
    out += format_real(a.real()) + ":" + format_real(a.imag());
  }
  return out;
}

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> entries;
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw DomainError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    if (entries.contains(key)) {
      throw DomainError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    entries.emplace(key, std::pair{std::string(trim(line.substr(eq + 1))), line_no});
  }

  const auto has = [&](std::string_view key) { return entries.find(key) != entries.end(); };
  // Runs `fn` on the value of `key`, prefixing any DomainError with its location.
  const auto with = [&](std::string_view key, auto&& fn) {
    const auto it = entries.find(key);
    try {
      fn(std::string_view(it->second.first));
    } catch (const DomainError& e) {
      throw DomainError("config line " + std::to_string(it->second.second) + " (" + std::string(key) + "): " + e.what());
    }
  };
  for (const char* required : {"topology", "system_coupling", "ancilla_coupling", "omega", "mode", "dt", "steps",
                               "ancilla_init", "network_init"}) {
    if (!has(required)) throw DomainError(std::string("config: missing required key '") + required + "'");
  }

  ExperimentConfig cfg;
  ProtocolConfig& p = cfg.protocol;
  with("topology", [&](auto v) { p.spec.topology = parse_topology(v); });
  with("system_coupling", [&](auto v) { p.spec.system_coupling = parse_coupling(v); });
  with("ancilla_coupling", [&](auto v) { p.spec.ancilla_coupling = parse_coupling(v); });
  with("omega", [&](auto v) { p.spec.omega = parse_real(v, "omega"); });
  if (has("omega0")) with("omega0", [&](auto v) { p.spec.omega0 = parse_real(v, "omega0"); });
  if (has("target")) with("target", [&](auto v) { p.spec.target = parse_qubit(v); });
  with("mode", [&](auto v) { p.mode = parse_mode(v); });
  with("dt", [&](auto v) { p.dt = parse_real(v, "dt"); });
  with("steps", [&](auto v) { p.steps = parse_count(v, "steps"); });
  with("ancilla_init", [&](auto v) { p.ancilla_init = parse_ket(v); });
  with("network_init", [&](auto v) { p.network_init = PureState::basis(v); });
  if (has("tracked_pairs")) {
    with("tracked_pairs", [&](auto v) { cfg.tracked_pairs = parse_pairs(v, p.spec.topology.size()); });
  }
  if (has("peak_min_height")) {
    with("peak_min_height", [&](auto v) { cfg.peak_min_height = parse_real(v, "peak_min_height"); });
  }
  if (has("name")) with("name", [&](auto v) { cfg.name = std::string(v); });
  if (has("csv_path")) with("csv_path", [&](auto v) { cfg.csv_path = std::string(v); });
  if (has("report_path")) with("report_path", [&](auto v) { cfg.report_path = std::string(v); });

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "error while reading config file");
  return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
  const auto& p = cfg.protocol;
  std::ostringstream os;
  if (!cfg.name.empty()) os << "name = " << cfg.name << '\n';
  os << "topology = " << format_topology(p.spec.topology) << '\n';
  os << "system_coupling = " << to_string(p.spec.system_coupling) << '\n';
  os << "omega0 = " << format_real(p.spec.omega0) << '\n';
  os << "ancilla_coupling = " << to_string(p.spec.ancilla_coupling) << '\n';
  os << "omega = " << format_real(p.spec.omega) << '\n';
  os << "target = " << p.spec.target << '\n';
  os << "mode = " << to_string(p.mode) << '\n';
  os << "dt = " << format_real(p.dt) << '\n';
  os << "steps = " << p.steps << '\n';
  os << "ancilla_init = " << format_ket(p.ancilla_init) << '\n';
  os << "network_init = ";
  const auto amps = p.network_init.amplitudes();
  const auto basis = std::find_if(amps.begin(), amps.end(), [](Complex a) { return a == Complex{1.0}; });
  if (basis == amps.end()) throw DomainError("serialize_config: network_init must be a computational basis state");
  const auto index = static_cast<std::size_t>(basis - amps.begin());
  for (std::size_t q = 0; q < p.network_init.num_qubits(); ++q) {
    os << (((index >> (p.network_init.num_qubits() - 1 - q)) & 1U) ? '1' : '0');
  }
  os << '\n';
  os << "tracked_pairs = ";
  if (cfg.tracked_pairs.empty()) {
    os << "all";
  } else {
    for (std::size_t k = 0; k < cfg.tracked_pairs.size(); ++k) os << (k ? ", " : "") << cfg.tracked_pairs[k].label();
  }
  os << '\n';
  os << "peak_min_height = " << format_real(cfg.peak_min_height) << '\n';
  if (!cfg.csv_path.empty()) os << "csv_path = " << cfg.csv_path << '\n';
  if (!cfg.report_path.empty()) os << "report_path = " << cfg.report_path << '\n';
  return os.str();
}

}  // namespace qnet
