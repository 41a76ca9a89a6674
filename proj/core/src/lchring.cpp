#include "knotinv/lchring.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "knotinv/finite_group.hpp"

namespace knotinv::lchring {

std::optional<std::int64_t> RingElement::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& key) { return t.first < key; });
  if (it == terms_.end() || it->first != w) return std::nullopt;
  return it->second;
}

std::string RingElement::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c) + "·[" +
           w.str(names) + "]";
  }
  return out;
}

GroupRing::GroupRing(std::shared_ptr<const WordOracle> oracle, Coefficients domain)
    : oracle_(std::move(oracle)), domain_(domain) {}

RingElement GroupRing::zero() const {
  RingElement e;
  e.domain_ = domain_;
  return e;
}

void GroupRing::accumulate(std::map<Word, std::int64_t>& acc, const Word& w,
                           std::int64_t c) const {
  auto& slot = acc[w];
  slot += c;
  if (domain_ == Coefficients::Z2) slot &= 1;
}

RingElement GroupRing::from_map(std::map<Word, std::int64_t>&& acc, bool unital) const {
  RingElement e;
  e.domain_ = domain_;
  e.unital_ = unital;
  for (auto& [w, c] : acc)
    if (c != 0) e.terms_.emplace_back(w, c);
  return e;
}

RingElement GroupRing::monomial(const Word& gamma, std::int64_t coeff) const {
  Word canon = oracle_->canonical(gamma);
  if (canon.empty())
    throw std::invalid_argument("identity word is not a generator of the non-unital ring");
  std::map<Word, std::int64_t> acc;
  accumulate(acc, canon, coeff);
  return from_map(std::move(acc), false);
}

RingElement GroupRing::add(const RingElement& a, const RingElement& b) const {
  if (a.domain_ != b.domain_ || a.domain_ != domain_ || a.unital_ != b.unital_)
    throw DomainMismatch("cannot add elements from different rings");
  std::map<Word, std::int64_t> acc;
  for (const auto& [w, c] : a.terms_) accumulate(acc, w, c);
  for (const auto& [w, c] : b.terms_) accumulate(acc, w, c);
  return from_map(std::move(acc), a.unital_);
}

RingElement GroupRing::scale(const RingElement& a, std::int64_t k) const {
  if (a.domain_ != domain_) throw DomainMismatch("element from another coefficient domain");
  std::map<Word, std::int64_t> acc;
  for (const auto& [w, c] : a.terms_) accumulate(acc, w, c * k);
  return from_map(std::move(acc), a.unital_);
}

Word GroupRing::canonical_product_word(const Word& from_a, const Word& from_b) const {
  // Opposite law: the factor from the second argument is written first.
  return oracle_->canonical(from_b * from_a);
}

RingElement GroupRing::product(const RingElement& a, const RingElement& b) const {
  if (a.domain_ != b.domain_ || a.domain_ != domain_)
    throw DomainMismatch("cannot multiply elements over different coefficients");
  if (a.unital_ != b.unital_)
    throw DomainMismatch("cannot mix unital and non-unital elements");
  const bool unital = a.unital_;
  std::map<Word, std::int64_t> acc;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = canonical_product_word(wa, wb);
      if (w.empty() && !unital) continue;  // gamma' gamma = 1 is excluded
      accumulate(acc, w, ca * cb);
    }
  return from_map(std::move(acc), unital);
}

RingElement GroupRing::unitalize(const RingElement& x) const {
  RingElement e = x;
  e.unital_ = true;
  return e;
}

RingElement GroupRing::unit() const {
  RingElement e;
  e.domain_ = domain_;
  e.unital_ = true;
  e.terms_.emplace_back(Word(), 1);
  return e;
}

UnitVerdict GroupRing::is_monomial_unit(const RingElement& x, UnitSearchLimits limits) const {
  if (domain_ != Coefficients::Z2)
    throw DomainMismatch("unit detection is implemented over Z2");
  UnitVerdict v;
  v.searched_support = limits.max_support;
  v.searched_length = limits.max_word_length;
  if (x.is_zero()) {
    v.tag = UnitVerdict::Tag::NotUnit;
    return v;
  }
  if (x.support_size() == 1) {
    // c_gamma c_{gamma^-1} = c_1 in the unitalization, so monomials invert.
    v.tag = UnitVerdict::Tag::Unit;
    v.unit_word = x.terms().front().first;
    return v;
  }

  // Candidate words for the inverse support, identity included.
  const std::vector<Word> universe = oracle_->enumerate_words(limits.max_word_length);
  const int n = static_cast<int>(universe.size());

  // Inverses of supp(x): a candidate y with x*y = c_1 must contain one of
  // them, otherwise the c_1 coefficient of x*y is zero.
  std::vector<bool> required(n, false);
  std::vector<Word> support;
  for (const auto& [w, c] : x.terms()) support.push_back(w);
  for (const Word& w : support) {
    // enumerate_words emits canonical representatives, so an index match
    // against the canonical inverse is enough.
    Word inv = oracle_->canonical(w.inverted());
    for (int i = 0; i < n; ++i)
      if (universe[i] == inv) required[i] = true;
  }

  // canonical(w_i * u_j) for every universe word and every support word,
  // encoded as indices into a product dictionary; slot 0 is the identity.
  std::vector<Word> dictionary{Word()};
  std::map<Word, int> dict_index{{Word(), 0}};
  auto intern = [&](const Word& w) {
    auto [it, inserted] = dict_index.try_emplace(w, static_cast<int>(dictionary.size()));
    if (inserted) dictionary.push_back(w);
    return it->second;
  };
  const int m = static_cast<int>(support.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = intern(canonical_product_word(support[j], universe[i]));

  // x * y = c_1 over Z2 iff after pairwise cancellation exactly the identity
  // slot remains with odd multiplicity.
  std::vector<int> scratch;
  auto is_inverse = [&](std::span<const int> subset) {
    scratch.clear();
    for (int i : subset)
      for (int j = 0; j < m; ++j) scratch.push_back(table[i][j]);
    std::sort(scratch.begin(), scratch.end());
    bool identity_odd = false;
    for (std::size_t k = 0; k < scratch.size();) {
      std::size_t run = k;
      while (run < scratch.size() && scratch[run] == scratch[k]) ++run;
      if ((run - k) % 2 == 1) {
        if (scratch[k] != 0) return false;
        identity_odd = true;
      }
      k = run;
    }
    return identity_odd;
  };

  std::vector<int> subset;
  bool exhausted_cleanly = true;
  std::function<bool(int, bool)> search = [&](int start, bool has_required) -> bool {
    if (!subset.empty()) {
      ++v.candidates_total;
      if (!has_required) {
        ++v.candidates_ruled_out;
      } else {
        if (v.products_checked >= limits.max_products) {
          exhausted_cleanly = false;
          return false;
        }
        ++v.products_checked;
        if (is_inverse(subset)) return true;
      }
    }
    if (static_cast<int>(subset.size()) == limits.max_support) return false;
    for (int i = start; i < n; ++i) {
      subset.push_back(i);
      if (search(i + 1, has_required || required[i])) return true;
      subset.pop_back();
      if (!exhausted_cleanly) return false;
    }
    return false;
  };

  if (search(0, false)) {
    // An inverse turned up although x is not a monomial (possible over
    // groups with torsion). The tag set cannot express "non-monomial unit".
    v.tag = UnitVerdict::Tag::Unknown;
    return v;
  }
  v.tag = exhausted_cleanly ? UnitVerdict::Tag::NotUnit : UnitVerdict::Tag::Unknown;
  return v;
}

// ---- Filtration ----------------------------------------------------------

LengthFunction word_length_function() {
  LengthFunction f;
  f.name = "word-length";
  f.value = [](const Word& w) { return static_cast<double>(w.size()); };
  f.enumeration_bound = [](double level) {
    return level < 0 ? -1 : static_cast<int>(level);
  };
  return f;
}

LengthFunction table_length_function(std::map<Word, double> table) {
  int maxlen = 0;
  for (const auto& [w, len] : table) {
    if (len <= 0) throw std::invalid_argument("length table must be positive");
    maxlen = std::max(maxlen, static_cast<int>(w.size()));
  }
  LengthFunction f;
  f.name = "table";
  f.value = [table = std::move(table)](const Word& w) {
    auto it = table.find(w);
    return it == table.end() ? std::numeric_limits<double>::infinity() : it->second;
  };
  f.enumeration_bound = [maxlen](double) { return maxlen; };
  return f;
}

FilteredComplex filtered_generators(std::shared_ptr<const WordOracle> oracle,
                                    const LengthFunction& ell, double level) {
  if (level < 0) throw std::invalid_argument("filtration level must be nonnegative");
  FilteredComplex fc;
  fc.oracle = oracle;
  fc.length_name = ell.name;
  fc.level = level;
  for (const Word& w : oracle->enumerate_words(ell.enumeration_bound(level))) {
    if (w.empty()) continue;
    if (ell.value(w) <= level) fc.generators.push_back({w, 1});
  }
  fc.possibly_overcounted = oracle->dedup_budget_hit();
  return fc;
}

std::vector<GradedGenerator> colimit_union(const std::vector<FilteredComplex>& levels) {
  if (levels.empty()) return {};
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].oracle != levels[0].oracle || levels[i].length_name != levels[0].length_name)
      throw NonMonotone("levels must share presentation and length function");
    if (!(levels[i].level > levels[i - 1].level))
      throw NonMonotone("levels must be strictly increasing");
  }
  std::set<Word> seen;
  std::vector<GradedGenerator> out;
  for (const auto& fc : levels)
    for (const auto& g : fc.generators)
      if (seen.insert(g.word).second) out.push_back(g);
  std::sort(out.begin(), out.end(),
            [](const GradedGenerator& a, const GradedGenerator& b) { return a.word < b.word; });
  return out;
}

OppositeLawReport opposite_law_check(const GroupRing& ring,
                                     const std::vector<std::pair<Word, Word>>& pairs) {
  OppositeLawReport report;
  const auto& oracle = ring.oracle();
  for (const auto& [g, gp] : pairs) {
    ++report.pairs_checked;
    // Standard group-ring product with swapped arguments: word g' g. The
    // comparison runs in the unitalization so inverse pairs stay meaningful.
    Word expected = oracle.canonical(gp * g);
    RingElement lhs = ring.product(ring.unitalize(ring.monomial(g)),
                                   ring.unitalize(ring.monomial(gp)));
    if (lhs.support_size() == 1 && lhs.terms().front().first == expected)
      ++report.agreements;
  }
  return report;
}

std::vector<OrbitGenerator> orbit_tensor_extension(int n, int k_min, int k_max) {
  if (n < 3) throw std::invalid_argument("orbit tensor extension needs dimension >= 3");
  std::vector<OrbitGenerator> out;
  for (int k = k_min; k <= k_max; ++k) {
    if (k == 0) continue;
    out.push_back({k, n + 2});
  }
  return out;
}

CompareResult compare_invariants(const grouppres::Presentation& p1,
                                 const grouppres::Presentation& p2, int cap) {
  CompareResult r;
  for (const auto& g : grouppres::builtin_group_library()) {
    if (g.order() > cap) continue;
    std::uint64_t c1 = grouppres::hom_count(p1, g, cap);
    std::uint64_t c2 = grouppres::hom_count(p2, g, cap);
    if (c1 != c2) {
      r.distinguished = true;
      r.witness_group = g.name();
      r.count_left = c1;
      r.count_right = c2;
      return r;
    }
  }
  return r;
}

}  // namespace knotinv::lchring
