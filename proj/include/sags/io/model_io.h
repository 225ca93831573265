#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "sags/core/error.h"
#include "sags/mol/context_model.h"
#include "sags/seq/language_model.h"

namespace sags::io {

// Model files are line-based text: a magic/version header, the payload, and
// a trailing "checksum <fnv1a-64 hex>" line covering every preceding byte.
inline constexpr int kFormatMajor = 1;
inline constexpr int kFormatMinor = 0;

class ChecksumError : public FormatError {
 public:
  using FormatError::FormatError;
};

class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

void write_language_model(std::ostream& out, const seq::LanguageModel& model);
seq::LanguageModel read_language_model(std::istream& in);
void save_language_model(const std::filesystem::path& path, const seq::LanguageModel& model);
seq::LanguageModel load_language_model(const std::filesystem::path& path);

void write_context_model(std::ostream& out, const mol::NodeContextModel& model);
mol::NodeContextModel read_context_model(std::istream& in);
void save_context_model(const std::filesystem::path& path, const mol::NodeContextModel& model);
mol::NodeContextModel load_context_model(const std::filesystem::path& path);

// idf weights for sentence embeddings, same container format.
void write_idf(std::ostream& out, const std::unordered_map<std::string, double>& idf);
std::unordered_map<std::string, double> read_idf(std::istream& in);
void save_idf(const std::filesystem::path& path, const std::unordered_map<std::string, double>& idf);
std::unordered_map<std::string, double> load_idf(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace sags::io
