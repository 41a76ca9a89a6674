#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "knotinv/finite_group.hpp"

using namespace knotinv::grouppres;

namespace {

Presentation trefoil2() {
  Presentation p;
  p.generators = {"a", "b"};
  p.relators = {Word::reduce({1, 2, 1, -2, -1, -2})};
  p.meridian = Word::single(1);
  return p;
}

Presentation free1() {
  Presentation p;
  p.generators = {"a"};
  p.meridian = Word::single(1);
  return p;
}

const FiniteGroup& by_name(const std::string& name) {
  for (const auto& g : builtin_group_library())
    if (g.name() == name) return g;
  throw std::runtime_error("missing group " + name);
}

}  // namespace

TEST_CASE("builtin library has the advertised groups and valid tables") {
  const auto& lib = builtin_group_library();
  REQUIRE(lib.size() == 18);
  for (const auto& g : lib) g.validate();
  CHECK(by_name("S3").order() == 6);
  CHECK(by_name("D4").order() == 8);
  CHECK(by_name("Q8").order() == 8);
  CHECK(by_name("A4").order() == 12);
  CHECK(by_name("D6").order() == 12);
  CHECK(by_name("S4").order() == 24);
  CHECK(by_name("C12").order() == 12);
}

TEST_CASE("Q8 has a single involution") {
  const auto& q8 = by_name("Q8");
  int involutions = 0;
  for (int a = 1; a < 8; ++a)
    if (q8.mul(a, a) == 0) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("hom count into the trivial group is 1") {
  CHECK(hom_count(trefoil2(), by_name("C1")) == 1);
  CHECK(hom_count(free1(), by_name("C1")) == 1);
}

TEST_CASE("hom count from a free generator is the group order") {
  for (const auto& g : builtin_group_library())
    CHECK(hom_count(free1(), g) == static_cast<std::uint64_t>(g.order()));
}

TEST_CASE("trefoil hom count into S3 matches hand enumeration") {
  // By parity, images (A, B) with ABA = BAB must share a sign; checking the
  // handful of cases gives exactly the 6 pairs A == B plus the 6 ordered
  // pairs of distinct transpositions.
  CHECK(hom_count(trefoil2(), by_name("S3")) == 12);
}

TEST_CASE("hom count cap is enforced") {
  CHECK_THROWS_AS(hom_count(free1(), by_name("S4"), 12), CapExceeded);
}

TEST_CASE("group library file round trip") {
  std::stringstream ss;
  write_group_library(ss, builtin_group_library());
  auto back = read_group_library(ss);
  REQUIRE(back.size() == builtin_group_library().size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].name() == builtin_group_library()[i].name());
    CHECK(back[i].order() == builtin_group_library()[i].order());
    back[i].validate();
  }
}
