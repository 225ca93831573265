#include "sags/core/objective_report.h"

#include <cstdlib>
#include <cstdio>
#include <string_view>

#include "sags/core/error.h"

namespace sags {

std::string ObjectiveReport::format_terms() const {
  std::string out;
  char buffer[64];
  for (const auto& [key, value] : terms) {
    if (!out.empty()) out += ';';
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    out += key;
    out += '=';
    out += buffer;
  }
  return out;
}

std::vector<std::pair<std::string, double>> ObjectiveReport::parse_terms(const std::string& text) {
  std::vector<std::pair<std::string, double>> terms;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto end = rest.find(';');
    const std::string_view item = rest.substr(0, end);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("malformed objective term '" + std::string(item) + "'");
    const std::string value(item.substr(eq + 1));
    char* parsed_end = nullptr;
    const double v = std::strtod(value.c_str(), &parsed_end);
    if (parsed_end != value.c_str() + value.size()) {
      throw InputError("malformed objective value '" + value + "'");
    }
    terms.emplace_back(std::string(item.substr(0, eq)), v);
    if (end == std::string_view::npos) break;
    rest.remove_prefix(end + 1);
  }
  return terms;
}

}  // namespace sags
