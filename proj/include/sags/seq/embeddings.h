#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sags/seq/sentence.h"

namespace sags::seq {

// Word vectors of a fixed dimension plus idf weights for the sentence
// embedding. Unknown tokens have an empty vector and idf 1.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;
  explicit EmbeddingStore(std::size_t dimension) : dimension_(dimension) {}

  // Text format: optional "count dim" header line, then one token per line
  // followed by dim space-separated decimals.
  static EmbeddingStore read(std::istream& in);
  static EmbeddingStore load(const std::filesystem::path& path);

  void add(std::string token, std::vector<double> vector);
  void set_idf(std::unordered_map<std::string, double> idf) { idf_ = std::move(idf); }

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  std::span<const double> vector(const std::string& token) const;
  double idf(const std::string& token) const;
  const std::unordered_map<std::string, double>& idf_table() const noexcept { return idf_; }

  // idf-weighted mean of the word vectors; a zero vector when nothing is known.
  std::vector<double> sentence_vector(const Sentence& s) const;

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
  std::unordered_map<std::string, double> idf_;
};

// idf(w) = ln((1 + N) / (1 + df(w))) + 1 over N corpus sentences.
std::unordered_map<std::string, double> compute_idf(std::span<const Sentence> corpus);

// Cosine similarity; 0 when either vector is zero or empty.
double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace sags::seq
