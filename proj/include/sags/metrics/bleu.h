#pragma once

#include <span>
#include <string>
#include <vector>

namespace sags::metrics {

using Tokens = std::span<const std::string>;

struct BleuConfig {
  int max_n = 4;
  // Added to numerator and denominator of an n-gram precision with no matches.
  double epsilon = 0.1;
  bool brevity_penalty = true;

  void validate() const;
};

// Sentence-level BLEU against a single reference:
//   BP * exp(sum_n ln(p_n) / max_n),  BP = min(1, exp(1 - |ref| / |cand|)).
// p_n is the clipped n-gram precision; when no n-gram matches it becomes
// epsilon / (count + epsilon), which is 1 when the candidate has no n-grams
// of that order.
double bleu(Tokens candidate, Tokens reference, const BleuConfig& config = {});

struct Segment {
  std::vector<std::string> candidate;
  std::vector<std::string> reference;
};

// Corpus-level BLEU: matches and counts are summed over all segments before
// the precisions and the brevity penalty are formed.
double corpus_bleu(std::span<const Segment> segments, const BleuConfig& config = {});

// alpha * BLEU(candidate, reference) - (1 - alpha) * BLEU(candidate, source).
double ibleu(Tokens candidate, Tokens reference, Tokens source, double alpha = 0.9,
             const BleuConfig& config = {});

// Clipped n-gram recall; throws InputError when |reference| < n.
double rouge_n(Tokens candidate, Tokens reference, int n);

}  // namespace sags::metrics
