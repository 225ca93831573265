#include "sags/seq/sentence.h"

#include <algorithm>
#include <cctype>

#include "sags/core/error.h"
#include "sags/core/rng.h"

namespace sags::seq {

bool is_terminal_punctuation(std::string_view token) noexcept {
  return token == "." || token == "," || token == "?" || token == "!";
}

std::size_t Sentence::editable_size() const noexcept {
  if (!words_.empty() && is_terminal_punctuation(words_.back())) return words_.size() - 1;
  return words_.size();
}

std::string Sentence::text() const {
  std::string out;
  for (const auto& w : words_) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

Sentence tokenize(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) break;
    std::string raw(text.substr(i, j - i));
    std::transform(raw.begin(), raw.end(), raw.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    std::size_t cut = raw.size();
    while (cut > 0 && is_terminal_punctuation(std::string_view(&raw[cut - 1], 1))) --cut;
    if (cut > 0) words.push_back(raw.substr(0, cut));
    for (std::size_t k = cut; k < raw.size(); ++k) words.emplace_back(1, raw[k]);
    i = j;
  }
  if (words.empty()) throw InputError("cannot tokenize blank text");
  return Sentence(std::move(words));
}

Sentence replace_word(const Sentence& s, std::size_t index, std::string word) {
  std::vector<std::string> words = s.words();
  words.at(index) = std::move(word);
  return Sentence(std::move(words));
}

Sentence insert_word(const Sentence& s, std::size_t index, std::string word) {
  std::vector<std::string> words = s.words();
  if (index > words.size()) throw ConfigError("insert index out of range");
  words.insert(words.begin() + static_cast<std::ptrdiff_t>(index), std::move(word));
  return Sentence(std::move(words));
}

Sentence delete_word(const Sentence& s, std::size_t index) {
  if (s.size() <= 1) return s;
  std::vector<std::string> words = s.words();
  if (index >= words.size()) throw ConfigError("delete index out of range");
  words.erase(words.begin() + static_cast<std::ptrdiff_t>(index));
  return Sentence(std::move(words));
}

Sentence split_crossover(const Sentence& a, const Sentence& b, std::size_t position) {
  std::vector<std::string> words(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(position, a.size())));
  if (position < b.size()) words.insert(words.end(), b.begin() + static_cast<std::ptrdiff_t>(position), b.end());
  if (words.empty()) return a;
  return Sentence(std::move(words));
}

}  // namespace sags::seq

std::size_t std::hash<sags::seq::Sentence>::operator()(const sags::seq::Sentence& s) const noexcept {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (const auto& w : s) {
    h = sags::mix64(h ^ std::hash<std::string>{}(w));
  }
  return static_cast<std::size_t>(h);
}
