#include "sags/seq/embeddings.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "sags/core/error.h"

namespace sags::seq {

EmbeddingStore EmbeddingStore::read(std::istream& in) {
  EmbeddingStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    std::vector<double> values;
    double v = 0.0;
    while (fields >> v) values.push_back(v);
    if (!fields.eof()) {
      throw InputError("embeddings line " + std::to_string(line_no) + ": non-numeric component");
    }
    // "count dim" header
    if (line_no == 1 && values.size() == 1 && token.find_first_not_of("0123456789") == std::string::npos) {
      continue;
    }
    if (values.empty()) throw InputError("embeddings line " + std::to_string(line_no) + ": no vector");
    if (store.dimension_ == 0) store.dimension_ = values.size();
    if (values.size() != store.dimension_) {
      throw InputError("embeddings line " + std::to_string(line_no) + ": expected dimension " +
                       std::to_string(store.dimension_) + ", got " + std::to_string(values.size()));
    }
    store.vectors_[token] = std::move(values);
  }
  return store;
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open embeddings file " + path.string());
  return read(in);
}

void EmbeddingStore::add(std::string token, std::vector<double> vector) {
  if (dimension_ == 0) dimension_ = vector.size();
  if (vector.size() != dimension_) throw ConfigError("embedding dimension mismatch for '" + token + "'");
  vectors_[std::move(token)] = std::move(vector);
}

std::span<const double> EmbeddingStore::vector(const std::string& token) const {
  const auto it = vectors_.find(token);
  if (it == vectors_.end()) return {};
  return it->second;
}

double EmbeddingStore::idf(const std::string& token) const {
  const auto it = idf_.find(token);
  return it == idf_.end() ? 1.0 : it->second;
}

std::vector<double> EmbeddingStore::sentence_vector(const Sentence& s) const {
  std::vector<double> sum(dimension_, 0.0);
  double weight = 0.0;
  for (const auto& w : s) {
    const double idf_w = idf(w);
    weight += idf_w;
    const auto v = vector(w);
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += idf_w * v[i];
  }
  if (weight > 0.0) {
    for (double& x : sum) x /= weight;
  }
  return sum;
}

std::unordered_map<std::string, double> compute_idf(std::span<const Sentence> corpus) {
  std::unordered_map<std::string, std::size_t> df;
  for (const auto& s : corpus) {
    std::unordered_set<std::string> seen(s.begin(), s.end());
    for (const auto& w : seen) ++df[w];
  }
  const double n = static_cast<double>(corpus.size());
  std::unordered_map<std::string, double> idf;
  for (const auto& [w, count] : df) {
    idf[w] = std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0;
  }
  return idf;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty() || a.size() != b.size()) return 0.0;
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace sags::seq
