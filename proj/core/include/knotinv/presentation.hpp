#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "knotinv/word.hpp"

namespace knotinv::grouppres {

// Finitely presented group <generators | relators> with a distinguished
// meridian word (a single generator for Wirtinger output).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  Word meridian;

  std::size_t rank() const { return generators.size(); }

  // Relator exponent-sum matrix, one row per relator.
  std::vector<std::vector<std::int64_t>> abelianization_matrix() const;

  // Rank of the abelianization (number of zero invariant factors) and the
  // nontrivial invariant factors, via Smith normal form.
  struct Abelianization {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;  // invariant factors > 1
  };
  Abelianization abelianization() const;

  // True when the abelianization is infinite cyclic, as for any knot group.
  bool abelianization_is_z() const;

  void validate() const;  // throws std::invalid_argument on broken invariants
};

// Smith normal form invariant factors (diagonal, nonnegative, d_i | d_{i+1});
// zeros are kept so callers can read off the rank deficiency.
std::vector<std::int64_t> smith_invariant_factors(
    std::vector<std::vector<std::int64_t>> m, std::size_t cols);

// Text form used by the CLI: "gen: ..." / "rel: ..." / "meridian: ..." lines.
void write_presentation(std::ostream& os, const Presentation& p);
Presentation read_presentation(std::istream& is);

}  // namespace knotinv::grouppres
