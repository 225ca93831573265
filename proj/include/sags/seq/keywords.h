#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "sags/seq/sentence.h"

namespace sags::seq {

using StopwordSet = std::unordered_set<std::string>;

// The bundled English list (data/stopwords_en.txt).
const StopwordSet& default_stopwords();
StopwordSet load_stopwords(const std::filesystem::path& path);

inline constexpr std::size_t kMaxKeywordPhrases = 5;

// RAKE: candidate phrases are maximal runs of tokens that are neither
// stopwords nor punctuation. A word scores degree / frequency, a phrase the
// sum of its word scores. Returns the distinct words of the best
// min(ceil(l / 3), 5) phrases, best phrase first; ties keep sentence order.
std::vector<std::string> extract_keywords(const Sentence& sentence, const StopwordSet& stopwords);

}  // namespace sags::seq
