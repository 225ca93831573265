#include "sags/metrics/bleu.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string_view>

#include "sags/core/error.h"

namespace sags::metrics {
namespace {

using NgramCounts = std::map<std::vector<std::string_view>, int>;

NgramCounts count_ngrams(Tokens tokens, int n) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + i, tokens.begin() + i + n);
    ++counts[std::move(gram)];
  }
  return counts;
}

struct Overlap {
  long matches = 0;
  long total = 0;
};

Overlap clipped_overlap(Tokens candidate, Tokens reference, int n) {
  const NgramCounts cand = count_ngrams(candidate, n);
  const NgramCounts ref = count_ngrams(reference, n);
  Overlap overlap;
  for (const auto& [gram, count] : cand) {
    overlap.total += count;
    const auto it = ref.find(gram);
    if (it != ref.end()) overlap.matches += std::min(count, it->second);
  }
  return overlap;
}

double smoothed_precision(const Overlap& o, double epsilon) {
  if (o.matches == 0) return epsilon / (static_cast<double>(o.total) + epsilon);
  return static_cast<double>(o.matches) / static_cast<double>(o.total);
}

double brevity(double cand_len, double ref_len, bool enabled) {
  if (!enabled) return 1.0;
  if (cand_len <= 0.0) return 0.0;
  return std::min(1.0, std::exp(1.0 - ref_len / cand_len));
}

}  // namespace

void BleuConfig::validate() const {
  if (max_n < 1) throw ConfigError("BLEU max_n must be >= 1");
  if (!(epsilon > 0.0)) throw ConfigError("BLEU epsilon must be positive");
}

double bleu(Tokens candidate, Tokens reference, const BleuConfig& config) {
  config.validate();
  if (candidate.empty()) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= config.max_n; ++n) {
    log_sum += std::log(smoothed_precision(clipped_overlap(candidate, reference, n), config.epsilon));
  }
  const double bp = brevity(static_cast<double>(candidate.size()), static_cast<double>(reference.size()),
                            config.brevity_penalty);
  return bp * std::exp(log_sum / config.max_n);
}

double corpus_bleu(std::span<const Segment> segments, const BleuConfig& config) {
  config.validate();
  std::vector<Overlap> totals(static_cast<std::size_t>(config.max_n));
  double cand_len = 0.0;
  double ref_len = 0.0;
  for (const auto& segment : segments) {
    cand_len += static_cast<double>(segment.candidate.size());
    ref_len += static_cast<double>(segment.reference.size());
    for (int n = 1; n <= config.max_n; ++n) {
      const Overlap o = clipped_overlap(segment.candidate, segment.reference, n);
      totals[n - 1].matches += o.matches;
      totals[n - 1].total += o.total;
    }
  }
  if (cand_len == 0.0) return 0.0;
  double log_sum = 0.0;
  for (const auto& o : totals) log_sum += std::log(smoothed_precision(o, config.epsilon));
  return brevity(cand_len, ref_len, config.brevity_penalty) * std::exp(log_sum / config.max_n);
}

double ibleu(Tokens candidate, Tokens reference, Tokens source, double alpha, const BleuConfig& config) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("iBLEU alpha must be in [0, 1]");
  return alpha * bleu(candidate, reference, config) - (1.0 - alpha) * bleu(candidate, source, config);
}

double rouge_n(Tokens candidate, Tokens reference, int n) {
  if (n < 1) throw ConfigError("ROUGE n must be >= 1");
  if (static_cast<int>(reference.size()) < n) {
    throw InputError("ROUGE-" + std::to_string(n) + ": reference shorter than n");
  }
  // Recall: clip reference n-gram counts by the candidate's.
  const Overlap o = clipped_overlap(reference, candidate, n);
  return static_cast<double>(o.matches) / static_cast<double>(o.total);
}

}  // namespace sags::metrics
