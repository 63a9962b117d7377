#include "dyson/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dyson {

KeyValueConfig KeyValueConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_string(ss.str());
}

KeyValueConfig KeyValueConfig::from_string(const std::string& text) {
  KeyValueConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    cfg.kv_[key] = value;
  }
  return cfg;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  kv_[key] = value;
}

bool KeyValueConfig::has(const std::string& key) const {
  return kv_.count(key) > 0;
}

std::string KeyValueConfig::get_string(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

double KeyValueConfig::get_real(const std::string& key) const {
  const std::string s = get_string(key);
  if (s == "inf" || s == "Inf" || s == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse real '" + s + "'");
  }
}

long long KeyValueConfig::get_int(const std::string& key) const {
  const std::string s = get_string(key);
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse integer '" + s +
                      "'");
  }
}

std::string KeyValueConfig::get_string_or(const std::string& key,
                                          const std::string& dflt) const {
  return has(key) ? get_string(key) : dflt;
}

double KeyValueConfig::get_real_or(const std::string& key, double dflt) const {
  return has(key) ? get_real(key) : dflt;
}

long long KeyValueConfig::get_int_or(const std::string& key,
                                     long long dflt) const {
  return has(key) ? get_int(key) : dflt;
}

RunConfig parse_run_config(const KeyValueConfig& kv) {
  RunConfig cfg;
  cfg.sim.n = static_cast<int>(kv.get_int("n"));
  cfg.sim.beta = kv.get_real("beta");
  cfg.sim.t_end = kv.get_real("t_end");
  cfg.sim.dt = kv.get_real("dt");
  cfg.sim.seed = static_cast<std::uint64_t>(kv.get_int("seed"));
  cfg.sim.delta_gap = kv.get_real_or("delta_gap", 1e-8);
  cfg.sim.record_every = static_cast<int>(kv.get_int_or("record_every", 1));
  cfg.n_traj = static_cast<int>(kv.get_int("n_traj"));
  cfg.workers = static_cast<int>(kv.get_int_or("workers", 1));
  cfg.output_dir = kv.get_string("output_dir");
  cfg.sim.validate();
  if (cfg.n_traj < 1) throw ConfigError("config: n_traj must be >= 1");
  if (cfg.workers < 1) throw ConfigError("config: workers must be >= 1");
  return cfg;
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_record_csv(const std::filesystem::path& path,
                      const TrajectoryRecord& rec, const std::string& prefix) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path.string());
  const Eigen::Index n = rec.records.empty() ? 0 : rec.records.front().size();
  out << "t";
  for (Eigen::Index j = 0; j < n; ++j) out << "," << prefix << "_" << (j + 1);
  out << "\n";
  for (std::size_t i = 0; i < rec.times.size(); ++i) {
    out << format_g17(rec.times[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      out << "," << format_g17(rec.records[i][j]);
    }
    out << "\n";
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_manifest(const std::filesystem::path& path, const RunConfig& cfg,
                    const std::vector<TrajectoryRecord>& records,
                    double wall_time_s,
                    const std::map<std::string, std::string>& extra) {
  nlohmann::json j;
  j["artifact_version"] = kArtifactVersion;
  j["config"] = {
      {"n", cfg.sim.n},
      {"beta", std::isinf(cfg.sim.beta) ? nlohmann::json("inf")
                                        : nlohmann::json(cfg.sim.beta)},
      {"t_end", cfg.sim.t_end},
      {"dt", cfg.sim.dt},
      {"seed", cfg.sim.seed},
      {"delta_gap", cfg.sim.delta_gap},
      {"record_every", cfg.sim.record_every},
      {"n_traj", cfg.n_traj},
      {"workers", cfg.workers},
      {"output_dir", cfg.output_dir.string()},
  };
  j["seed"] = cfg.sim.seed;
  j["n_traj"] = cfg.n_traj;
  nlohmann::json stops = nlohmann::json::array();
  for (const auto& rec : records) {
    nlohmann::json s;
    s["trajectory"] = rec.traj_index;
    s["stop_reason"] = to_string(rec.stop_reason);
    s["valid"] = rec.valid;
    if (rec.stopped_at) s["stopped_at"] = *rec.stopped_at;
    stops.push_back(s);
  }
  j["stop_reasons"] = stops;
  j["wall_time_s"] = wall_time_s;
  for (const auto& [k, v] : extra) j[k] = v;

  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << j.dump(2) << "\n";
}

void write_validation_report(const std::filesystem::path& path,
                             const std::string& suite,
                             const std::vector<ValidationCheck>& checks) {
  nlohmann::json j;
  j["artifact_version"] = kArtifactVersion;
  j["suite"] = suite;
  bool all = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"check", c.check},
                   {"value", c.value},
                   {"threshold", c.threshold},
                   {"pass", c.pass}});
    all = all && c.pass;
  }
  j["checks"] = arr;
  j["pass"] = all;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace dyson
