#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sags {

// Per-term breakdown of one objective evaluation.
struct ObjectiveReport {
  double total = 0.0;
  std::vector<std::pair<std::string, double>> terms;

  // "key=value;key=value" with round-trip precision.
  std::string format_terms() const;
  static std::vector<std::pair<std::string, double>> parse_terms(const std::string& text);
};

}  // namespace sags
