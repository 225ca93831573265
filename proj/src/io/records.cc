#include "sags/io/records.h"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>

#include "sags/core/error.h"
#include "sags/core/objective_report.h"

namespace sags::io {
namespace {

constexpr std::size_t kFixedBefore = 7;  // run_id .. f_terms
constexpr std::size_t kFixedAfter = 4;   // steps, wall_ms, config, error

std::string join_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(fields[i]);
  }
  return out + "\n";
}

std::int64_t parse_int(const std::string& text) {
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size()) throw FormatError("expected an integer, got '" + text + "'");
  return v;
}

std::uint64_t parse_uint(const std::string& text) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || text[0] == '-' || end != text.c_str() + text.size()) {
    throw FormatError("expected an unsigned integer, got '" + text + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double parse_double(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) throw FormatError("expected a number, got '" + text + "'");
  return v;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  char c = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && in.peek() == '\n') in.get(c);
      end_field();
      rows.push_back(std::move(row));
      row.clear();
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw FormatError("unterminated quoted CSV field");
  if (field_started || !row.empty()) {
    end_field();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_records(std::ostream& out, std::span<const RunRecord> records) {
  std::vector<std::string> header{"run_id", "domain", "seed", "input", "output", "f_total", "f_terms"};
  std::vector<std::string> metric_names;
  if (!records.empty()) {
    for (const auto& [name, value] : records.front().metrics) metric_names.push_back(name);
  }
  header.insert(header.end(), metric_names.begin(), metric_names.end());
  for (const char* name : {"steps", "wall_ms", "config", "error"}) header.emplace_back(name);
  out << join_row(header);

  for (const auto& r : records) {
    if (r.metrics.size() != metric_names.size()) throw ConfigError("records disagree on metric columns");
    std::vector<std::string> row{r.run_id, r.domain, std::to_string(r.seed), r.input, r.output,
                                 format_double(r.f_total), ObjectiveReport{0.0, r.f_terms}.format_terms()};
    for (std::size_t i = 0; i < metric_names.size(); ++i) {
      if (r.metrics[i].first != metric_names[i]) throw ConfigError("records disagree on metric columns");
      row.push_back(format_double(r.metrics[i].second));
    }
    row.push_back(std::to_string(r.steps));
    row.push_back(format_double(r.wall_ms));
    row.push_back(r.config);
    row.push_back(r.error);
    out << join_row(row);
  }
}

std::vector<RunRecord> read_records(std::istream& in) {
  const auto rows = parse_csv(in);
  if (rows.empty()) throw FormatError("record file has no header");
  const auto& header = rows.front();
  if (header.size() < kFixedBefore + kFixedAfter || header[0] != "run_id") {
    throw FormatError("record file header is not recognized");
  }
  const std::size_t metric_count = header.size() - kFixedBefore - kFixedAfter;
  std::vector<RunRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != header.size()) {
      throw FormatError("record row " + std::to_string(i) + " has " + std::to_string(f.size()) + " fields, expected " +
                        std::to_string(header.size()));
    }
    RunRecord r;
    r.run_id = f[0];
    r.domain = f[1];
    r.seed = parse_uint(f[2]);
    r.input = f[3];
    r.output = f[4];
    r.f_total = parse_double(f[5]);
    r.f_terms = ObjectiveReport::parse_terms(f[6]);
    for (std::size_t m = 0; m < metric_count; ++m) {
      r.metrics.emplace_back(header[kFixedBefore + m], parse_double(f[kFixedBefore + m]));
    }
    const std::size_t tail = kFixedBefore + metric_count;
    r.steps = parse_int(f[tail]);
    r.wall_ms = parse_double(f[tail + 1]);
    r.config = f[tail + 2];
    r.error = f[tail + 3];
    out.push_back(std::move(r));
  }
  return out;
}

void write_trajectory(std::ostream& out, std::span<const StepRecord> trajectory) {
  out << "step,temperature,score,accepted\n";
  for (const auto& s : trajectory) {
    out << s.step << ',' << format_double(s.temperature) << ',' << format_double(s.score) << ','
        << (s.accepted ? 1 : 0) << '\n';
  }
}

std::vector<StepRecord> read_trajectory(std::istream& in) {
  const auto rows = parse_csv(in);
  if (rows.empty() || rows.front() != std::vector<std::string>{"step", "temperature", "score", "accepted"}) {
    throw FormatError("trajectory header is not recognized");
  }
  std::vector<StepRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() != 4) throw FormatError("trajectory row " + std::to_string(i) + " is malformed");
    out.push_back(StepRecord{parse_int(f[0]), parse_int(f[3]) != 0, parse_double(f[2]), parse_double(f[1])});
  }
  return out;
}

}  // namespace sags::io
