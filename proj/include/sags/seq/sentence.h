#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sags::seq {

// A tokenized, lowercased word sequence. Never empty once it leaves
// tokenize(); edits preserve length >= 1.
class Sentence {
 public:
  Sentence() = default;
  explicit Sentence(std::vector<std::string> words) : words_(std::move(words)) {}

  const std::vector<std::string>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const std::string& operator[](std::size_t i) const { return words_[i]; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  // Number of leading tokens that may be edited: everything except a
  // trailing punctuation token.
  std::size_t editable_size() const noexcept;

  // Space-joined tokens.
  std::string text() const;

  friend bool operator==(const Sentence&, const Sentence&) = default;

 private:
  std::vector<std::string> words_;
};

// One of . , ? !
bool is_terminal_punctuation(std::string_view token) noexcept;

// Lowercases, splits on whitespace and detaches trailing . , ? ! from words.
// Throws InputError on blank input.
Sentence tokenize(std::string_view text);

Sentence replace_word(const Sentence& s, std::size_t index, std::string word);
Sentence insert_word(const Sentence& s, std::size_t index, std::string word);
// Returns s unchanged when the deletion would leave it empty.
Sentence delete_word(const Sentence& s, std::size_t index);

// Single-point crossover: a[0, position) followed by b[position, |b|).
Sentence split_crossover(const Sentence& a, const Sentence& b, std::size_t position);

}  // namespace sags::seq

template <>
struct std::hash<sags::seq::Sentence> {
  std::size_t operator()(const sags::seq::Sentence& s) const noexcept;
};
