#include "knotinv/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace knotinv::grouppres {

std::vector<std::vector<std::int64_t>> Presentation::abelianization_matrix() const {
  std::vector<std::vector<std::int64_t>> m(relators.size(),
                                           std::vector<std::int64_t>(rank(), 0));
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (Letter l : relators[r].letters())
      m[r][generator_of(l)] += exponent_of(l);
  return m;
}

namespace {

void swap_rows(std::vector<std::vector<std::int64_t>>& m, std::size_t a, std::size_t b) {
  std::swap(m[a], m[b]);
}
void swap_cols(std::vector<std::vector<std::int64_t>>& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<std::int64_t> smith_invariant_factors(
    std::vector<std::vector<std::int64_t>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  while (t < n) {
    // Locate a nonzero pivot of minimal absolute value.
    std::size_t pr = t, pc = t;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
          best = std::abs(m[i][j]);
          pr = i;
          pc = j;
        }
    if (best == 0) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (m[i][t] != 0) {
        std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (m[t][j] != 0) {
        std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // residues shrank; pick a new pivot

    // Divisibility fix-up: fold in any entry the pivot does not divide.
    bool fixed = true;
    for (std::size_t i = t + 1; i < rows && fixed; ++i)
      for (std::size_t j = t + 1; j < cols && fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          fixed = false;
        }
    if (fixed) ++t;
  }
  std::vector<std::int64_t> d(n, 0);
  for (std::size_t i = 0; i < t; ++i) d[i] = std::abs(m[i][i]);
  return d;
}

Presentation::Abelianization Presentation::abelianization() const {
  auto d = smith_invariant_factors(abelianization_matrix(), rank());
  Abelianization ab;
  std::size_t nonzero = 0;
  for (auto v : d)
    if (v != 0) {
      ++nonzero;
      if (v > 1) ab.torsion.push_back(v);
    }
  ab.free_rank = static_cast<int>(rank() - nonzero);
  return ab;
}

bool Presentation::abelianization_is_z() const {
  auto ab = abelianization();
  return ab.free_rank == 1 && ab.torsion.empty();
}

void Presentation::validate() const {
  for (const Word& r : relators) {
    if (r != Word::reduce(r.letters()))
      throw std::invalid_argument("relator not freely reduced");
    if (r.max_generator() >= static_cast<int>(rank()))
      throw std::invalid_argument("relator references unknown generator");
  }
  if (meridian.max_generator() >= static_cast<int>(rank()))
    throw std::invalid_argument("meridian references unknown generator");
}

namespace {

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  std::istringstream is(text);
  std::string tok;
  std::vector<Letter> letters;
  while (is >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      exp = std::stoi(tok.substr(pos + 1));
      tok = tok.substr(0, pos);
    }
    auto it = index.find(tok);
    if (it == index.end()) throw std::invalid_argument("unknown generator: " + tok);
    Letter base = static_cast<Letter>(it->second + 1);
    for (int k = 0; k < std::abs(exp); ++k) letters.push_back(exp > 0 ? base : -base);
  }
  return Word::reduce(letters);
}

}  // namespace

void write_presentation(std::ostream& os, const Presentation& p) {
  os << "gen:";
  for (const auto& g : p.generators) os << ' ' << g;
  os << '\n';
  for (const Word& r : p.relators) os << "rel: " << r.str(p.generators) << '\n';
  os << "meridian: " << p.meridian.str(p.generators) << '\n';
}

Presentation read_presentation(std::istream& is) {
  Presentation p;
  std::string line;
  std::vector<std::string> relator_texts;
  std::string meridian_text;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected 'key: value' line");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (key == "gen") {
      std::istringstream gs(value);
      std::string name;
      while (gs >> name) p.generators.push_back(name);
    } else if (key == "rel") {
      relator_texts.push_back(value);
    } else if (key == "meridian") {
      meridian_text = value;
    } else {
      throw std::invalid_argument("unknown key: " + key);
    }
  }
  for (const auto& t : relator_texts) p.relators.push_back(parse_word(t, p.generators));
  p.meridian = parse_word(meridian_text, p.generators);
  p.validate();
  return p;
}

}  // namespace knotinv::grouppres
