#pragma once

#include <string_view>

// Contents of files under data/, compiled into the library at build time.
namespace sags::data {

extern const std::string_view kStopwordsEn;
extern const std::string_view kPlogpContributions;

}  // namespace sags::data
