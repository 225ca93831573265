#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sags/core/annealer.h"

namespace sags::io {

// One optimization run as stored in result CSVs.
struct RunRecord {
  std::string run_id;
  std::string domain;  // "sequence" or "graph"
  std::uint64_t seed = 0;
  std::string input;
  std::string output;
  double f_total = 0.0;
  std::vector<std::pair<std::string, double>> f_terms;
  std::vector<std::pair<std::string, double>> metrics;
  std::int64_t steps = 0;
  double wall_ms = 0.0;
  std::string config;  // JSON snapshot
  // Set for runs that failed before producing an output.
  std::string error;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

// RFC 4180 quoting: fields holding a comma, quote, CR or LF are quoted with
// inner quotes doubled.
std::string csv_escape(std::string_view field);
// Splits CSV text into rows of fields; quoted fields may span lines.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

// Columns: run_id, domain, seed, input, output, f_total, f_terms, one column
// per metric (names from the first record), steps, wall_ms, config, error.
// Every record must carry the same metric names in the same order.
void write_records(std::ostream& out, std::span<const RunRecord> records);
std::vector<RunRecord> read_records(std::istream& in);

// Columns: step, temperature, score, accepted.
void write_trajectory(std::ostream& out, std::span<const StepRecord> trajectory);
std::vector<StepRecord> read_trajectory(std::istream& in);

// %.17g, so values survive a text round trip.
std::string format_double(double value);
double parse_double(const std::string& text);

}  // namespace sags::io
