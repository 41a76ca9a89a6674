#include <catch2/catch_amalgamated.hpp>

#include "knotinv/word.hpp"

using knotinv::grouppres::Letter;
using knotinv::grouppres::Word;

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(Word::reduce({1, -1}).empty());
  CHECK(Word::reduce({1, 2, -2, 1}) == Word::reduce({1, 1}));
  CHECK(Word::reduce(std::initializer_list<Letter>{}).empty());
}

TEST_CASE("free reduction is idempotent and length-nonincreasing") {
  // Hand-rolled generator sweep over short letter sequences.
  std::vector<std::vector<Letter>> inputs;
  const Letter alphabet[] = {1, -1, 2, -2};
  for (Letter a : alphabet)
    for (Letter b : alphabet)
      for (Letter c : alphabet)
        for (Letter d : alphabet) inputs.push_back({a, b, c, d});
  for (const auto& in : inputs) {
    Word w = Word::reduce(in);
    CHECK(w.size() <= in.size());
    CHECK(Word::reduce(w.letters()) == w);
  }
}

TEST_CASE("concatenation reduces across the seam") {
  Word ab = Word::reduce({1, 2});
  Word binv_a = Word::reduce({-2, 1});
  CHECK(ab * binv_a == Word::reduce({1, 1}));
  CHECK(ab * ab.inverted() == Word());
}

TEST_CASE("length-lex order puts positive letters first") {
  Word a = Word::single(1), ainv = Word::single(-1), b = Word::single(2);
  CHECK(a < ainv);
  CHECK(ainv < b);
  CHECK(b < Word::reduce({1, 1}));
}

TEST_CASE("rendering uses generator names") {
  std::vector<std::string> names{"a", "b"};
  CHECK(Word::reduce({1, -2}).str(names) == "a b^-1");
  CHECK(Word().str(names) == "1");
}
