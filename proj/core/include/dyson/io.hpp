#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "dyson/sde.hpp"

namespace dyson {

inline constexpr const char* kArtifactVersion = "dyson 0.1.0";

// Flat key=value configuration ('#' starts a comment). Values stay strings
// until a typed accessor pulls them out; "inf" is the infinity token for
// beta.
class KeyValueConfig {
 public:
  static KeyValueConfig from_file(const std::filesystem::path& path);
  static KeyValueConfig from_string(const std::string& text);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  // All getters throw ConfigError naming the key when it is missing or
  // unparsable.
  std::string get_string(const std::string& key) const;
  double get_real(const std::string& key) const;  // accepts "inf"
  long long get_int(const std::string& key) const;

  std::string get_string_or(const std::string& key, const std::string& dflt) const;
  double get_real_or(const std::string& key, double dflt) const;
  long long get_int_or(const std::string& key, long long dflt) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

// Simulation run description assembled from a config file plus overrides.
struct RunConfig {
  SimConfig sim;
  int n_traj = 1;
  int workers = 1;
  std::filesystem::path output_dir;
};

// Required keys: n, beta, t_end, dt, seed, n_traj, output_dir.
// Optional: delta_gap, record_every, workers.
RunConfig parse_run_config(const KeyValueConfig& kv);

std::string format_g17(double x);

// CSV schema: header "t,<prefix>_1,...,<prefix>_n", 17 significant digits.
void write_record_csv(const std::filesystem::path& path,
                      const TrajectoryRecord& rec,
                      const std::string& prefix = "lambda");

// JSON run manifest: config echo, seed, n_traj, per-trajectory stop
// reasons, artifact version and wall time.
void write_manifest(const std::filesystem::path& path, const RunConfig& cfg,
                    const std::vector<TrajectoryRecord>& records,
                    double wall_time_s,
                    const std::map<std::string, std::string>& extra = {});

struct ValidationCheck {
  std::string check;
  double value;
  double threshold;
  bool pass;
};

void write_validation_report(const std::filesystem::path& path,
                             const std::string& suite,
                             const std::vector<ValidationCheck>& checks);

}  // namespace dyson
