#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sags/mol/mol_graph.h"

namespace sags::test {

// Absolute path of a file under data/.
std::filesystem::path data_path(std::string_view name);

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(std::string_view name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

// VF2-style matcher: atoms are paired in breadth-first order of `a`, each
// candidate pair must agree on element, charge, hydrogens and degree and on
// every bond (with order) to atoms already paired.
bool isomorphic(const mol::MolGraph& a, const mol::MolGraph& b);

// Copy of `g` whose atom i becomes atom perm[i].
mol::MolGraph permuted(const mol::MolGraph& g, const std::vector<int>& perm);

}  // namespace sags::test
