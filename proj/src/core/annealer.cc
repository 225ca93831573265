#include "sags/core/annealer.h"

#include <numbers>

namespace sags {

std::string_view to_string(Schedule schedule) {
  switch (schedule) {
    case Schedule::kLinear:
      return "linear";
    case Schedule::kExponential:
      return "exponential";
    case Schedule::kLogarithmic:
      return "logarithmic";
    case Schedule::kConstant:
      return "constant";
  }
  return "unknown";
}

Schedule parse_schedule(std::string_view name) {
  if (name == "linear") return Schedule::kLinear;
  if (name == "exponential") return Schedule::kExponential;
  if (name == "logarithmic") return Schedule::kLogarithmic;
  if (name == "constant") return Schedule::kConstant;
  throw ConfigError("unknown schedule '" + std::string(name) + "'");
}

void AnnealerConfig::validate() const {
  if (!(t_init >= 0.0) || !std::isfinite(t_init)) throw ConfigError("t_init must be finite and >= 0");
  if (!(cooling_coeff >= 0.0) || !std::isfinite(cooling_coeff)) {
    throw ConfigError("cooling_coeff must be finite and >= 0");
  }
  if (max_steps < 1) throw ConfigError("max_steps must be >= 1");
}

AnnealerConfig AnnealerConfig::hill_climbing(std::int64_t max_steps, std::uint64_t seed) {
  return fixed_temperature(0.0, max_steps, seed);
}

AnnealerConfig AnnealerConfig::fixed_temperature(double t, std::int64_t max_steps, std::uint64_t seed) {
  AnnealerConfig config;
  config.t_init = t;
  config.cooling_coeff = 0.0;
  config.schedule = Schedule::kConstant;
  config.max_steps = max_steps;
  config.seed = seed;
  return config;
}

double accept_probability(double f_new, double f_old, double temperature) {
  if (std::isnan(f_new) || f_new == -std::numeric_limits<double>::infinity()) return 0.0;
  if (f_new >= f_old) return 1.0;
  if (temperature <= 0.0) return 0.0;
  return std::exp((f_new - f_old) / temperature);
}

double temperature_at(const AnnealerConfig& config, std::int64_t step) {
  const auto t = static_cast<double>(step);
  switch (config.schedule) {
    case Schedule::kLinear: {
      if (config.cooling_coeff > 0.0 && t >= std::ceil(config.t_init / config.cooling_coeff)) return 0.0;
      const double value = config.t_init - config.cooling_coeff * t;
      return value > 0.0 ? value : 0.0;
    }
    case Schedule::kExponential:
      return config.t_init * std::exp(-config.cooling_coeff * t);
    case Schedule::kLogarithmic:
      return config.t_init / std::log(std::numbers::e + config.cooling_coeff * t);
    case Schedule::kConstant:
      return config.t_init;
  }
  return 0.0;
}

}  // namespace sags
