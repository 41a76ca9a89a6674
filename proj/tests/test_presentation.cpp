#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "knotinv/presentation.hpp"

using namespace knotinv::grouppres;

namespace {

Presentation trefoil2() {
  Presentation p;
  p.generators = {"a", "b"};
  // a b a b^-1 a^-1 b^-1, i.e. aba = bab
  p.relators = {Word::reduce({1, 2, 1, -2, -1, -2})};
  p.meridian = Word::single(1);
  return p;
}

}  // namespace

TEST_CASE("smith normal form of a diagonalizable matrix") {
  // [[2,4],[6,10]] ~ diag(2, 2): d1=2, d2=|det|/d1=2... computed by hand:
  // det = -4, gcd of entries 2, so factors are 2 and 2.
  std::vector<std::vector<std::int64_t>> m{{2, 4}, {6, 10}};
  auto d = smith_invariant_factors(m, 2);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 2);
}

TEST_CASE("smith normal form keeps zero factors for rank-deficient input") {
  std::vector<std::vector<std::int64_t>> m{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
  auto d = smith_invariant_factors(m, 3);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 1);
  CHECK(d[1] == 1);
  CHECK(d[2] == 0);
}

TEST_CASE("trefoil presentation abelianizes to Z") {
  CHECK(trefoil2().abelianization_is_z());
}

TEST_CASE("free group of rank 2 does not abelianize to Z") {
  Presentation p;
  p.generators = {"a", "b"};
  p.meridian = Word::single(1);
  auto ab = p.abelianization();
  CHECK(ab.free_rank == 2);
  CHECK_FALSE(p.abelianization_is_z());
}

TEST_CASE("presentation text round trip") {
  Presentation p = trefoil2();
  std::stringstream ss;
  write_presentation(ss, p);
  Presentation q = read_presentation(ss);
  CHECK(q.generators == p.generators);
  CHECK(q.relators == p.relators);
  CHECK(q.meridian == p.meridian);
}
