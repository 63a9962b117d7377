#include "dyson/sde.hpp"

namespace dyson {

void SimConfig::validate() const {
  if (n < 1) throw ConfigError("config: n must be >= 1");
  if (!(beta > 0.0)) throw ConfigError("config: beta must be positive or inf");
  if (!(t_end > 0.0)) throw ConfigError("config: t_end must be > 0");
  if (!(dt > 0.0)) throw ConfigError("config: dt must be > 0");
  if (!(dt < t_end)) throw ConfigError("config: dt must be < t_end");
  if (!(delta_gap > 0.0)) throw ConfigError("config: delta_gap must be > 0");
  if (record_every < 1) throw ConfigError("config: record_every must be >= 1");
}

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::none:
      return "none";
    case StopReason::collision:
      return "collision";
    case StopReason::model_failure:
      return "model_failure";
  }
  return "unknown";
}

}  // namespace dyson
