#include "sags/seq/keywords.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "sags/core/error.h"
#include "sags/embedded_data.h"

namespace sags::seq {
namespace {

StopwordSet parse_stopwords(std::istream& in) {
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string w;
    while (fields >> w) words.insert(w);
  }
  return words;
}

}  // namespace

const StopwordSet& default_stopwords() {
  static const StopwordSet words = [] {
    std::istringstream in{std::string(data::kStopwordsEn)};
    return parse_stopwords(in);
  }();
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword list " + path.string());
  return parse_stopwords(in);
}

std::vector<std::string> extract_keywords(const Sentence& sentence, const StopwordSet& stopwords) {
  std::vector<std::vector<std::string>> phrases;
  std::vector<std::string> current;
  for (const auto& w : sentence) {
    const bool boundary = stopwords.count(w) != 0 || is_terminal_punctuation(w);
    if (boundary) {
      if (!current.empty()) phrases.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(w);
    }
  }
  if (!current.empty()) phrases.push_back(std::move(current));
  if (phrases.empty()) return {};

  std::unordered_map<std::string, double> frequency;
  std::unordered_map<std::string, double> degree;
  for (const auto& phrase : phrases) {
    for (const auto& w : phrase) {
      frequency[w] += 1.0;
      degree[w] += static_cast<double>(phrase.size());
    }
  }

  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i = 0; i < phrases.size(); ++i) {
    double score = 0.0;
    for (const auto& w : phrases[i]) score += degree[w] / frequency[w];
    ranked.emplace_back(score, i);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

  const std::size_t wanted = std::min(kMaxKeywordPhrases, (sentence.size() + 2) / 3);
  std::vector<std::string> keywords;
  for (std::size_t r = 0; r < ranked.size() && r < wanted; ++r) {
    for (const auto& w : phrases[ranked[r].second]) {
      if (std::find(keywords.begin(), keywords.end(), w) == keywords.end()) keywords.push_back(w);
    }
  }
  return keywords;
}

}  // namespace sags::seq
