#include "knotinv/word.hpp"

#include <algorithm>

namespace knotinv::grouppres {

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) continue;
    if (!w.letters_.empty() && w.letters_.back() == -l) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::reduce(std::initializer_list<Letter> letters) {
  return reduce(std::span<const Letter>(letters.begin(), letters.size()));
}

Word Word::inverted() const {
  Word w;
  w.letters_.resize(letters_.size());
  std::transform(letters_.rbegin(), letters_.rend(), w.letters_.begin(),
                 [](Letter l) { return -l; });
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> cat = a.letters_;
  cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
  return Word::reduce(cat);
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (letters_.size() != other.letters_.size())
    return letters_.size() <=> other.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto c = letter_key(letters_[i]) <=> letter_key(other.letters_[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

int Word::max_generator() const {
  int m = -1;
  for (Letter l : letters_) m = std::max(m, generator_of(l));
  return m;
}

std::string Word::str(std::span<const std::string> names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    int g = generator_of(letters_[i]);
    out += g < static_cast<int>(names.size()) ? names[g] : "g" + std::to_string(g);
    if (letters_[i] < 0) out += "^-1";
  }
  return out;
}

}  // namespace knotinv::grouppres
