#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainops/constructors.hpp"
#include "chainops/gallery.hpp"
#include "chainops/properties.hpp"
#include "oracles.hpp"

using namespace chainops;

namespace {

void agree_with_oracles(const OpTable& op, bool matrices) {
  const std::pair<PropertyReport, bool> cases[] = {
      {is_idempotent(op), oracle::idempotent(op)},
      {is_quasitrivial(op), oracle::quasitrivial(op)},
      {is_symmetric(op), oracle::symmetric(op)},
      {is_nondecreasing(op), oracle::nondecreasing(op)},
      {is_associative(op), oracle::associative(op)},
  };
  for (const auto& [report, expected] : cases) {
    CAPTURE(report.name);
    CHECK(report.holds == expected);
    if (!report.holds) CHECK(replay_witness(op, report));
  }
  CHECK(neutral_elements(op) == oracle::neutral(op));
  CHECK(isolated_points(op) == oracle::isolated(op));
  if (matrices) {
    const auto b = is_bisymmetric(op);
    const auto u = is_ultrabisymmetric(op);
    CHECK(b.holds == oracle::bisymmetric(op));
    CHECK(u.holds == oracle::ultrabisymmetric(op));
    if (!b.holds) CHECK(replay_witness(op, b));
    if (!u.holds) CHECK(replay_witness(op, u));
  }
}

}  // namespace

TEST_CASE("every binary table on L_2 and ternary table on L_2 matches the oracles") {
  oracle::for_all_tables(2, 2, [](const OpTable& op) { agree_with_oracles(op, true); });
  oracle::for_all_tables(2, 3, [](const OpTable& op) { agree_with_oracles(op, true); });
}

TEST_CASE("every binary table on L_3 matches the oracles (matrix checks on a stride)") {
  std::size_t i = 0;
  oracle::for_all_tables(3, 2, [&](const OpTable& op) { agree_with_oracles(op, i++ % 97 == 0); });
  CHECK(i == 19683);
}

TEST_CASE("ternary median on L_2 is not associative, with a replayable witness") {
  const auto op = gallery_get("median3", {2, std::nullopt}).op;
  const auto r = is_associative(op);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->tuples.front().size() == 5);
  CHECK(replay_witness(op, r));
  CHECK(r.to_line().rfind("PROP associative FAILS", 0) == 0);
}

TEST_CASE("projection is bisymmetric but not ultrabisymmetric") {
  const auto op = gallery_get("projection_first").op;
  CHECK(is_bisymmetric(op).holds);
  const auto u = is_ultrabisymmetric(op);
  CHECK_FALSE(u.holds);
  CHECK(replay_witness(op, u));
}

TEST_CASE("tampered witnesses do not replay") {
  const auto op = gallery_get("median3", {2, std::nullopt}).op;
  auto r = is_associative(op);
  REQUIRE(r.witness);
  // A constant tuple is never a counterexample for an idempotent table.
  std::fill(r.witness->tuples[0].begin(), r.witness->tuples[0].end(), 1);
  CHECK_FALSE(replay_witness(op, r));
}

TEST_CASE("report lines") {
  const OpTable mx(FiniteChain(2), 2, {1, 2, 2, 2});
  CHECK(is_associative(mx).to_line() == "PROP associative HOLDS");
  const OpTable p(FiniteChain(2), 2, {1, 1, 2, 2});
  CHECK(is_symmetric(p).to_line() == "PROP symmetric FAILS args=(1,2)/(2,1) got=1,2");
}

TEST_CASE("matrix scans respect their guard") {
  const OpTable big = OpTable::tabulate(FiniteChain(5), 3, [](std::span<const Element> t) { return t[0]; });
  CHECK_THROWS_AS(is_bisymmetric(big, MatrixGuard{1000}), ResourceError);
  CHECK_THROWS_AS(is_ultrabisymmetric(big, MatrixGuard{1000}), ResourceError);
}

TEST_CASE("surjectivity") {
  CHECK(is_surjective(OpTable(FiniteChain(2), 2, {1, 2, 2, 2})).holds);
  const auto r = is_surjective(OpTable(FiniteChain(3), 1, {1, 1, 3}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness->values == std::vector<Element>{2});
}

TEST_CASE("threshold switch") {
  CHECK(check_threshold_switch(gallery_get("fig1_left").op).holds);
  CHECK(check_threshold_switch(gallery_get("median3", {2, std::nullopt}).op).holds);
  CHECK_THROWS_AS(check_threshold_switch(gallery_get("z2_H").op), PreconditionError);
  oracle::for_all_tables(2, 3, [](const OpTable& op) {
    if (oracle::quasitrivial(op)) CHECK(check_threshold_switch(op).holds);
  });
}

TEST_CASE("single-peakedness: three deciders and the oracle agree on every ordering up to k = 6") {
  for (int k = 1; k <= 6; ++k) {
    std::vector<Element> seq(static_cast<std::size_t>(k));
    std::iota(seq.begin(), seq.end(), 1);
    int accepted = 0;
    do {
      const LinearOrdering ord(FiniteChain(k), seq);
      const bool expected = oracle::single_peaked(ord);
      const PropertyReport reports[] = {is_single_peaked(ord), single_peaked_via_convexity(ord),
                                        single_peaked_via_sisd(ord)};
      for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK(r.holds == expected);
        if (!r.holds) CHECK(replay_witness(ord, r));
      }
      accepted += expected ? 1 : 0;
    } while (std::next_permutation(seq.begin(), seq.end()));
    CHECK(accepted == 1 << (k - 1));
  }
}

TEST_CASE("single-peaked examples") {
  const FiniteChain c4(4);
  CHECK(is_single_peaked(LinearOrdering(c4, {3, 2, 4, 1})).holds);
  CHECK(is_single_peaked(LinearOrdering(c4, {1, 2, 3, 4})).holds);
  const FiniteChain c3(3);
  const auto r = is_single_peaked(LinearOrdering(c3, {1, 3, 2}));
  CHECK_FALSE(r.holds);
  CHECK(r.witness->tuples.front() == Tuple{1, 2, 3});
  CHECK_FALSE(single_peaked_via_sisd(LinearOrdering(c3, {3, 1, 2})).holds);
}

TEST_CASE("property lookup by name") {
  const auto op = gallery_get("fig1_right").op;
  for (const auto& name : table_property_names()) CHECK(check_property(op, name).holds);
  CHECK(check_property(op, "threshold_switch").holds);
  CHECK_THROWS_AS(check_property(op, "commutative"), LookupError);
}
