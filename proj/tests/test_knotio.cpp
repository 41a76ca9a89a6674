#include <catch2/catch_amalgamated.hpp>

#include "knotinv/finite_group.hpp"
#include "knotinv/knotio.hpp"

using namespace knotinv::knotio;
using knotinv::grouppres::FiniteGroup;
using knotinv::grouppres::Presentation;
using knotinv::grouppres::Word;
using knotinv::grouppres::builtin_group_library;
using knotinv::grouppres::hom_count;

namespace {

Presentation trefoil2() {
  Presentation p;
  p.generators = {"a", "b"};
  p.relators = {Word::reduce({1, 2, 1, -2, -1, -2})};
  p.meridian = Word::single(1);
  return p;
}

const char* kTrefoilPd =
    "X 2 1 3 4 +\n"
    "X 4 3 5 6 +\n"
    "X 6 5 1 2 +\n";

const char* kFig8Pd =
    "X 2 1 4 5 +\n"
    "X 5 3 6 7 -\n"
    "X 7 4 1 9 +\n"
    "X 9 6 3 2 -\n";

bool same_hom_counts(const Presentation& a, const Presentation& b, int cap) {
  for (const FiniteGroup& g : builtin_group_library()) {
    if (g.order() > cap) continue;
    if (hom_count(a, g) != hom_count(b, g)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("braid tokens parse literally") {
  BraidWord b = parse_braid("1 1 1", 2);
  CHECK(b.strands == 2);
  CHECK(b.letters == std::vector<int>{1, 1, 1});

  BraidWord e = parse_braid("", 1);
  CHECK(e.strands == 1);
  CHECK(e.letters.empty());

  BraidWord f = parse_braid("1 -2 1 -2", 3);
  CHECK(f.letters == std::vector<int>{1, -2, 1, -2});

  BraidWord s = parse_braid("s1 S2 s1 S2");
  CHECK(s.strands == 3);
  CHECK(s.letters == std::vector<int>{1, -2, 1, -2});
}

TEST_CASE("braid parse errors carry positions") {
  CHECK_THROWS_AS(parse_braid("1 x2 1"), UnknownToken);
  CHECK_THROWS_AS(parse_braid("1 0 1"), UnknownToken);
  CHECK_THROWS_AS(parse_braid("3", 2), IndexOutOfRange);
}

TEST_CASE("empty braid on one strand closes to the unknot") {
  Presentation p = wirtinger_from_braid(parse_braid("", 1));
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.empty());
  CHECK(p.meridian == Word::single(1));
}

TEST_CASE("trefoil braid closure gives the trefoil group") {
  Presentation p = wirtinger_from_braid(parse_braid("1 1 1", 2));
  CHECK(p.generators.size() == 3);  // one per arc
  CHECK(p.abelianization_is_z());
  // Tietze-equivalence is checked through hom counts against the literal
  // two-generator presentation, over every library group of order <= 12.
  CHECK(same_hom_counts(p, trefoil2(), 12));
}

TEST_CASE("figure-eight braid closure abelianizes to Z") {
  Presentation p = wirtinger_from_braid(parse_braid("1 -2 1 -2", 3));
  CHECK(p.generators.size() == 4);
  CHECK(p.abelianization_is_z());
}

TEST_CASE("unknot planar diagram with zero crossings") {
  Presentation p = wirtinger_from_pd(parse_pd_text("A 1\n"));
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.empty());
}

TEST_CASE("trefoil planar diagram structure") {
  Presentation p = wirtinger_from_pd(parse_pd_text(kTrefoilPd));
  CHECK(p.generators.size() == 3);
  CHECK(p.relators.size() == 3);
  CHECK(p.abelianization_is_z());
}

TEST_CASE("braid-derived and pd-derived trefoils agree on hom counts") {
  Presentation braid = wirtinger_from_braid(parse_braid("1 1 1", 2));
  Presentation pd = wirtinger_from_pd(parse_pd_text(kTrefoilPd));
  CHECK(same_hom_counts(braid, pd, 24));
}

TEST_CASE("braid-derived and pd-derived figure-eights agree on hom counts") {
  Presentation braid = wirtinger_from_braid(parse_braid("1 -2 1 -2", 3));
  Presentation pd = wirtinger_from_pd(parse_pd_text(kFig8Pd));
  CHECK(pd.abelianization_is_z());
  CHECK(same_hom_counts(braid, pd, 12));
}

TEST_CASE("trefoil and figure-eight are separated by some library group") {
  Presentation trefoil = wirtinger_from_braid(parse_braid("1 1 1", 2));
  Presentation fig8 = wirtinger_from_braid(parse_braid("1 -2 1 -2", 3));
  CHECK_FALSE(same_hom_counts(trefoil, fig8, 24));
}

TEST_CASE("malformed arcs are rejected") {
  CHECK_THROWS_AS(wirtinger_from_pd(parse_pd_text("X 1 2 3 4 +\n")), MalformedArc);
}

TEST_CASE("parsing is a pure function of its input") {
  Presentation a = wirtinger_from_braid(parse_braid("1 -2 1 -2", 3));
  Presentation b = wirtinger_from_braid(parse_braid("1 -2 1 -2", 3));
  CHECK(a.generators == b.generators);
  CHECK(a.relators == b.relators);
  CHECK(a.meridian == b.meridian);
}
