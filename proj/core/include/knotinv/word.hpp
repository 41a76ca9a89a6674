#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace knotinv::grouppres {

// A letter of a group word: +(i+1) is generator i, -(i+1) its inverse.
using Letter = std::int32_t;

inline Letter inverse(Letter l) { return -l; }
inline int generator_of(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int exponent_of(Letter l) { return l > 0 ? 1 : -1; }

// Freely reduced word over the generators of some presentation. The empty
// word is the identity. Ordering is by length first, then letter-wise with
// a < a^-1 < b < b^-1 < ...
class Word {
public:
  Word() = default;

  // Free-reduces the given letter sequence (cancels adjacent l, l^-1 pairs).
  static Word reduce(std::span<const Letter> letters);
  static Word reduce(std::initializer_list<Letter> letters);

  static Word single(Letter l) { return reduce({l}); }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverted() const;

  friend Word operator*(const Word& a, const Word& b);  // concat + reduce

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& other) const;

  // Max generator index referenced, or -1 for the empty word.
  int max_generator() const;

  // Rendering with per-generator names, e.g. "a b^-1"; "1" for the identity.
  std::string str(std::span<const std::string> names) const;

private:
  std::vector<Letter> letters_;
};

// Sort key used for the (length, lex) order.
inline std::uint64_t letter_key(Letter l) {
  return 2 * static_cast<std::uint64_t>(l > 0 ? l : -l) + (l < 0 ? 1 : 0);
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w.letters()) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace knotinv::grouppres
