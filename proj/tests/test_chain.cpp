#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainops/chain.hpp"
#include "oracles.hpp"

using namespace chainops;

TEST_CASE("chains are nonempty") {
  CHECK_THROWS_AS(FiniteChain(0), DomainError);
  CHECK_THROWS_AS(FiniteChain(-3), DomainError);
  const FiniteChain c(4);
  CHECK(c.size() == 4);
  CHECK(c.contains(1));
  CHECK(c.contains(4));
  CHECK_FALSE(c.contains(0));
  CHECK_FALSE(c.contains(5));
  CHECK_THROWS_AS(c.require(5), DomainError);
}

TEST_CASE("meet and join") {
  const std::vector<Element> xs{3, 1, 4, 2};
  CHECK(meet(xs) == 1);
  CHECK(join(xs) == 4);
}

TEST_CASE("tuple codes are big-endian lexicographic") {
  const FiniteChain c(3);
  const auto tuples = oracle::all_tuples(3, 3);
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    CHECK(encode_tuple(c, 3, tuples[i]) == i);
    CHECK(decode_tuple(c, 3, i) == tuples[i]);
  }
  CHECK(encode_tuple(c, 2, std::vector<Element>{1, 2}) == 1);
  CHECK(encode_tuple(c, 2, std::vector<Element>{2, 1}) == 3);
}

TEST_CASE("encoding rejects bad tuples") {
  const FiniteChain c(3);
  CHECK_THROWS_AS(encode_tuple(c, 2, std::vector<Element>{1, 4}), DomainError);
  CHECK_THROWS_AS(encode_tuple(c, 2, std::vector<Element>{0, 1}), DomainError);
  CHECK_THROWS_AS(encode_tuple(c, 2, std::vector<Element>{1, 1, 1}), DomainError);
  try {
    encode_tuple(c, 2, std::vector<Element>{1, 9});
    FAIL("no throw");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("entry 2") != std::string::npos);
  }
}

TEST_CASE("sizes are guarded") {
  CHECK(checked_power(3, 4) == 81);
  CHECK(checked_power(1, 50) == 1);
  CHECK_THROWS_AS(checked_power(10, 9), ResourceError);
  CHECK_THROWS_AS(checked_power(4, 4, 100), ResourceError);
}

TEST_CASE("next_tuple walks every tuple once") {
  Tuple t{1, 1};
  int steps = 1;
  while (detail::next_tuple(3, t)) ++steps;
  CHECK(steps == 9);
}

TEST_CASE("operation tables validate their cells") {
  const FiniteChain c(2);
  CHECK_THROWS_AS(OpTable(c, 2, {1, 2, 2}), ConstructionError);
  CHECK_THROWS_AS(OpTable(c, 2, {1, 2, 3, 1}), ConstructionError);
  CHECK_THROWS_AS(OpTable(c, 2, {0, 1, 1, 1}), ConstructionError);
  CHECK_THROWS_AS(OpTable(c, 0, {1}), Error);

  const OpTable mx = OpTable::tabulate(c, 2, [](std::span<const Element> t) { return std::max(t[0], t[1]); });
  CHECK(mx.values() == std::vector<Element>{1, 2, 2, 2});
  CHECK(mx({2, 1}) == 2);
  CHECK(mx({1, 1}) == 1);
  CHECK_THROWS_AS(mx({1, 3}), DomainError);
  CHECK_THROWS_AS(mx({1}), DomainError);
  CHECK(mx == OpTable(c, 2, {1, 2, 2, 2}));
  CHECK_FALSE(mx == OpTable(c, 2, {1, 1, 1, 2}));
}

TEST_CASE("linear orderings") {
  const FiniteChain c(4);
  CHECK_THROWS_AS(LinearOrdering(c, {1, 2, 3}), ConstructionError);
  CHECK_THROWS_AS(LinearOrdering(c, {1, 2, 2, 4}), ConstructionError);
  CHECK_THROWS_AS(LinearOrdering(c, {1, 2, 3, 5}), ConstructionError);

  const LinearOrdering o(c, {3, 2, 4, 1});
  CHECK(o.rank(3) == 1);
  CHECK(o.rank(1) == 4);
  CHECK(o.minimum() == 3);
  CHECK(o.leq(3, 1));
  CHECK_FALSE(o.leq(1, 3));
  CHECK(o.less(2, 4));
  CHECK_FALSE(o.less(2, 2));
  CHECK(o.max_of(2, 4) == 4);
  CHECK(o.max_of(1, 4) == 1);
  CHECK(LinearOrdering::natural(c).seq() == std::vector<Element>{1, 2, 3, 4});
}

TEST_CASE("g-maps are nonincreasing into e..k with g(e) = e") {
  const FiniteChain c(4);
  CHECK_FALSE(GMap::check(c, 3, {4, 3, 3}).has_value());
  CHECK(GMap::check(c, 5, {4, 4, 4, 4, 5}).has_value());
  CHECK(GMap::check(c, 3, {4, 3}).has_value());
  CHECK(GMap::check(c, 3, {3, 4, 3}).has_value());
  CHECK(GMap::check(c, 3, {2, 3, 3}).has_value());
  CHECK(GMap::check(c, 3, {4, 4, 4}).has_value());
  CHECK_THROWS_AS(GMap(c, 3, {3, 4, 3}), ConstructionError);

  const GMap g(c, 3, {4, 3, 3});
  CHECK(g(1) == 4);
  CHECK(g(3) == 3);
  CHECK_THROWS_AS(g(4), DomainError);
}

TEST_CASE("tuple formatting") {
  CHECK(format_tuple(std::vector<Element>{3, 3}) == "(3,3)");
  CHECK(format_tuple(std::vector<Element>{1}) == "(1)");
}
