#include "sags/core/genetic.h"

namespace sags {

void GaConfig::validate() const {
  // A single-slot population is allowed: it is the mutation hill climber the
  // multi-slot run reduces to when crossover is off.
  if (population_size < 1) throw ConfigError("population_size must be >= 1");
  if (!(p_mutation >= 0.0 && p_mutation <= 1.0)) throw ConfigError("p_mutation must be in [0, 1]");
  if (!(p_crossover >= 0.0 && p_crossover <= 1.0)) throw ConfigError("p_crossover must be in [0, 1]");
  if (generations < 1) throw ConfigError("generations must be >= 1");
}

}  // namespace sags
