#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotinv/presentation.hpp"
#include "knotinv/word.hpp"

namespace knotinv::grouppres {

// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
public:
  FiniteGroup() = default;
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }

  // Image of a word under generator images (one image per presentation
  // generator).
  int evaluate(const Word& w, std::span<const int> images) const;

  // Checks identity, inverses and associativity; throws on failure.
  void validate() const;

private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

// The bundled library: cyclic groups of order <= 12, S3, D4, Q8, A4, D6, S4.
const std::vector<FiniteGroup>& builtin_group_library();

// Table file format: optional '# name' comment, then "order n" and n rows of
// n indices. Several groups may be concatenated in one file.
std::vector<FiniteGroup> read_group_library(std::istream& is);
void write_group_library(std::ostream& os, const std::vector<FiniteGroup>& groups);
std::vector<FiniteGroup> load_group_library_file(const std::string& path);

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// All homomorphisms p -> G as generator-image tuples, by exhaustive
// backtracking over |G|^rank assignments.
std::vector<std::vector<int>> enumerate_homs(const Presentation& p, const FiniteGroup& g);

// Number of homomorphisms p -> G. Throws CapExceeded when |G| > cap.
std::uint64_t hom_count(const Presentation& p, const FiniteGroup& g, int cap = 24);

}  // namespace knotinv::grouppres
