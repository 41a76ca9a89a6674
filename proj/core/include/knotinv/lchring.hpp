#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotinv/equality.hpp"
#include "knotinv/word.hpp"

namespace knotinv::lchring {

using grouppres::Word;
using grouppres::WordOracle;

enum class Coefficients { Z2, Z };

struct DomainMismatch : std::invalid_argument {
  explicit DomainMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Finite formal sum of group elements. Non-unital elements never carry the
// identity word; unitalized elements may. Term words are canonical
// representatives and coefficients are nonzero (0/1 for Z2).
class RingElement {
public:
  using Term = std::pair<Word, std::int64_t>;

  RingElement() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  bool unital() const { return unital_; }
  Coefficients domain() const { return domain_; }

  std::optional<std::int64_t> coefficient(const Word& canonical_word) const;

  std::string str(std::span<const std::string> names) const;

  bool operator==(const RingElement&) const = default;

private:
  friend class GroupRing;
  std::vector<Term> terms_;  // sorted by word
  Coefficients domain_ = Coefficients::Z2;
  bool unital_ = false;
};

struct UnitSearchLimits {
  int max_support = 3;        // s: support size of inverse candidates
  int max_word_length = 4;    // L: word length of inverse candidates
  std::uint64_t max_products = 50'000'000;
};

struct UnitVerdict {
  enum class Tag { Unit, NotUnit, Unknown };
  Tag tag = Tag::Unknown;
  Word unit_word;  // gamma with x = c_gamma, when Unit

  // NotUnit certificate: the search space that was exhausted. Candidates
  // whose support misses every inverse of supp(x) have no c_1 term in the
  // product and are ruled out wholesale; the rest were multiplied out.
  std::uint64_t candidates_total = 0;
  std::uint64_t candidates_ruled_out = 0;
  std::uint64_t products_checked = 0;
  int searched_support = 0;
  int searched_length = 0;
};

// The group-ring invariant: Z2 or Z combinations of nontrivial group
// elements with the opposite-law product (c_gamma, c_gamma') -> c_{gamma'
// gamma}, identity products dropped; plus the unitalization obtained by
// adjoining c_1.
class GroupRing {
public:
  GroupRing(std::shared_ptr<const WordOracle> oracle, Coefficients domain);

  const WordOracle& oracle() const { return *oracle_; }
  Coefficients domain() const { return domain_; }

  RingElement zero() const;
  // c_gamma; throws std::invalid_argument if gamma is provably the identity.
  RingElement monomial(const Word& gamma, std::int64_t coeff = 1) const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement scale(const RingElement& a, std::int64_t k) const;

  // Bilinear extension of (c_gamma, c_gamma') -> c_{gamma' gamma}; in the
  // non-unital ring identity products vanish, in the unitalization they
  // contribute c_1.
  RingElement product(const RingElement& a, const RingElement& b) const;

  RingElement differential(const RingElement&) const { return zero(); }

  RingElement unitalize(const RingElement& x) const;
  RingElement unit() const;  // c_1 in the unitalization

  // Cor-style unit detector over Z2: monomials are units; anything of larger
  // support is certified NotUnit by exhausting the truncated inverse search.
  UnitVerdict is_monomial_unit(const RingElement& x, UnitSearchLimits limits = {}) const;

private:
  Word canonical_product_word(const Word& from_a, const Word& from_b) const;
  void accumulate(std::map<Word, std::int64_t>& acc, const Word& w, std::int64_t c) const;
  RingElement from_map(std::map<Word, std::int64_t>&& acc, bool unital) const;

  std::shared_ptr<const WordOracle> oracle_;
  Coefficients domain_;
};

// ---- Action filtration and colimit --------------------------------------

struct GradedGenerator {
  Word word;  // canonical, nontrivial
  int degree = 1;
};

struct LengthFunction {
  std::string name;
  std::function<double(const Word&)> value;      // evaluated on canonical words
  std::function<int(double)> enumeration_bound;  // max word length to scan for level A
};

// Free-reduced word length, the default stand-in for geodesic length.
LengthFunction word_length_function();
// User-supplied length table on canonical words; words outside the table get
// +infinity and are never enumerated.
LengthFunction table_length_function(std::map<Word, double> table);

struct FilteredComplex {
  std::shared_ptr<const WordOracle> oracle;
  std::string length_name;
  double level = 0;
  std::vector<GradedGenerator> generators;
  bool possibly_overcounted = false;  // some equality stayed Unknown
};

FilteredComplex filtered_generators(std::shared_ptr<const WordOracle> oracle,
                                    const LengthFunction& ell, double level);

struct NonMonotone : std::invalid_argument {
  explicit NonMonotone(const std::string& what) : std::invalid_argument(what) {}
};

// Union of an increasing chain of filtered complexes; the continuation maps
// are inclusions, so the union must equal the top level.
std::vector<GradedGenerator> colimit_union(const std::vector<FilteredComplex>& levels);

// ---- Reports -------------------------------------------------------------

struct OppositeLawReport {
  std::size_t pairs_checked = 0;
  std::size_t agreements = 0;
  bool all_agree() const { return pairs_checked == agreements; }
};

// Checks product(c_g, c_g') == c_{g' g} against the standard group-ring
// product with swapped arguments, over the given word pairs.
OppositeLawReport opposite_law_check(const GroupRing& ring,
                                     const std::vector<std::pair<Word, Word>>& pairs);

struct OrbitGenerator {
  int index = 0;   // k
  int degree = 0;  // n + 2
};

// Abstract generator list for the circular-handle tensor factor: one symbol
// c_k per k in [k_min, k_max] \ {0}, all of degree n + 2.
std::vector<OrbitGenerator> orbit_tensor_extension(int n, int k_min, int k_max);

struct CompareResult {
  bool distinguished = false;
  std::string witness_group;
  std::uint64_t count_left = 0;
  std::uint64_t count_right = 0;
};

// Distinguished iff some library group admits different hom counts.
CompareResult compare_invariants(const grouppres::Presentation& p1,
                                 const grouppres::Presentation& p2, int cap = 24);

}  // namespace knotinv::lchring
