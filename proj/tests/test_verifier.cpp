#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "chainops/constructors.hpp"
#include "chainops/verifier.hpp"
#include "oracles.hpp"

using namespace chainops;

namespace {

std::vector<Constraint> every_constraint() {
  std::vector<Constraint> out;
  for (int bits = 0; bits < 32; ++bits) {
    out.push_back(Constraint{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0, (bits & 8) != 0, (bits & 16) != 0});
  }
  return out;
}

bool satisfies(const OpTable& op, const Constraint& c) {
  return (!c.quasitrivial || oracle::quasitrivial(op)) && (!c.symmetric || oracle::symmetric(op)) &&
         (!c.nondecreasing || oracle::nondecreasing(op)) && (!c.idempotent || oracle::idempotent(op)) &&
         (!c.has_neutral || !oracle::neutral(op).empty());
}

void compare_with_brute_force(int k, int n) {
  std::vector<OpTable> all;
  oracle::for_all_tables(k, n, [&](const OpTable& op) { all.push_back(op); });
  for (const auto& c : every_constraint()) {
    CAPTURE(c.label());
    std::vector<OpTable> expected;
    for (const auto& op : all) {
      if (satisfies(op, c)) expected.push_back(op);
    }
    const auto got = enumerate_ops(FiniteChain(k), n, c);
    // Both lists are in lexicographic order of the value vector.
    CHECK(got == expected);
  }
}

}  // namespace

TEST_CASE("enumeration equals brute-force filtering") {
  compare_with_brute_force(1, 3);
  compare_with_brute_force(2, 2);
  compare_with_brute_force(2, 3);
  compare_with_brute_force(3, 2);
}

TEST_CASE("population estimates have closed forms") {
  const FiniteChain c3(3);
  CHECK(estimate_population(c3, 2, Constraint{}) == doctest::Approx(std::pow(3.0, 9)));
  CHECK(estimate_population(c3, 2, Constraint{true}) == doctest::Approx(std::pow(2.0, 6)));
  CHECK(estimate_population(c3, 2, Constraint{true, true}) == doctest::Approx(8));
  CHECK(estimate_population(c3, 3, Constraint{true, true}) == doctest::Approx(192));
  CHECK(estimate_population(FiniteChain(4), 2, Constraint{true, true}) == doctest::Approx(64));
  CHECK(estimate_population(c3, 2, Constraint{false, false, false, true}) == doctest::Approx(729));
  // k^n cells, of which those with d distinct entries have d candidates.
  CHECK(estimate_population(c3, 3, Constraint{true}) == doctest::Approx(std::pow(2.0, 18) * std::pow(3.0, 6)));
}

TEST_CASE("uninorm counts are powers of two") {
  for (int k = 1; k <= 5; ++k) CHECK(count_uninorms(FiniteChain(k), 2) == std::uint64_t{1} << (k - 1));
  for (int k = 1; k <= 3; ++k) CHECK(count_uninorms(FiniteChain(k), 3) == std::uint64_t{1} << (k - 1));
  CHECK(count_uninorms(FiniteChain(3), 4) == 4);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_ops(FiniteChain(4), 2, Constraint{}), ResourceError);
  CHECK_THROWS_AS(enumerate_uninorms(FiniteChain(5), 3, 1000), ResourceError);
  int seen = 0;
  for_each_op(FiniteChain(3), 2, Constraint{}, [&](const OpTable&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("every suite holds at small scales") {
  for (const auto& name : suite_names()) {
    for (int n : {2, 3}) {
      CAPTURE(name);
      CAPTURE(n);
      const auto r = run_suite(name, FiniteChain(3), n);
      CHECK(r.matches_claim());
      const bool unconstrained = name == "prop20gt" || name == "prop21ft" || name == "surj65";
      CHECK(r.exhaustive == (n == 2 || !unconstrained));
      CHECK(r.population > 0);
      if (name == "open_q_search") CHECK(r.verdict == Verdict::NoneFound);
      else CHECK(r.verdict == Verdict::Holds);
    }
  }
}

TEST_CASE("relaxed hypotheses produce replayable counterexamples") {
  SuiteOptions o;
  o.relax_hypothesis = true;
  for (const char* name : {"cor24f", "cor24f1", "prop19gz", "prop21ft", "prop20gt", "surj65", "idis"}) {
    CAPTURE(name);
    const auto r = run_suite(name, FiniteChain(3), 2, o);
    CHECK(r.verdict == Verdict::Fails);
    CHECK(r.matches_claim());
    CHECK(r.counterexample_table.has_value());
    CHECK_FALSE(r.counterexample.empty());
    CHECK(replay_counterexample(r, o));
  }
  CHECK_THROWS_AS(run_suite("marmaytor", FiniteChain(3), 2, o), LookupError);
}

TEST_CASE("projection is the first counterexample when ultrabisymmetry is weakened to bisymmetry") {
  SuiteOptions o;
  o.relax_hypothesis = true;
  const auto r = run_suite("prop19gz", FiniteChain(2), 2, o);
  REQUIRE(r.counterexample_table);
  CHECK(r.counterexample_table->values() == std::vector<Element>{1, 1, 2, 2});
}

TEST_CASE("parallel and serial scans agree") {
  SuiteOptions serial, parallel;
  serial.relax_hypothesis = parallel.relax_hypothesis = true;
  parallel.jobs = 7;
  for (const char* name : {"prop21ft", "surj65", "cor24f1"}) {
    const auto a = run_suite(name, FiniteChain(3), 2, serial);
    const auto b = run_suite(name, FiniteChain(3), 2, parallel);
    CHECK(a.verdict == b.verdict);
    CHECK(a.counterexample_table == b.counterexample_table);
    CHECK(a.counterexample == b.counterexample);
  }
  parallel.relax_hypothesis = false;
  CHECK(run_suite("bl56", FiniteChain(6), 2, parallel).verdict == Verdict::Holds);
}

TEST_CASE("envelope populations") {
  CHECK(run_suite("cor24f", FiniteChain(3), 3).population == 192);
  CHECK(run_suite("cor24f", FiniteChain(4), 2).population == 64);
  CHECK(run_suite("prop20gt", FiniteChain(3), 2).population == 19683);
  CHECK(run_suite("prop21ft", FiniteChain(3), 2).population == 19683);
  const auto sp = run_suite("sp_equiv", FiniteChain(6), 2);
  CHECK(sp.population == 720);
  CHECK(sp.note.find("accepters=32") != std::string::npos);
  CHECK(run_suite("marmaytor", FiniteChain(5), 3).n == 2);
}

TEST_CASE("sampling is labeled and can be refused") {
  SuiteOptions o;
  o.samples = 500;
  const auto r = run_suite("prop21ft", FiniteChain(4), 2, o);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.population == 500);
  CHECK(r.population_label.find("non-exhaustive") != std::string::npos);
  CHECK(r.verdict == Verdict::Holds);
  o.exhaustive_only = true;
  CHECK_THROWS_AS(run_suite("prop21ft", FiniteChain(4), 2, o), ResourceError);
}

TEST_CASE("narrowed populations are reported") {
  const auto r = run_suite("f456dfs", FiniteChain(3), 3);
  CHECK(r.population == 192);
  CHECK(r.population_label.find("narrowed") != std::string::npos);
}

TEST_CASE("lemma_ee notes converse failures at n = 3") {
  const auto r = run_suite("lemma_ee", FiniteChain(3), 3);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.note.find("converse") != std::string::npos);
}

TEST_CASE("report formats") {
  const auto r = run_suite("marmaytor", FiniteChain(4), 2);
  CHECK(r.to_line() == "SUITE marmaytor k=4 n=2 pop=8 verdict=holds");
  CHECK(r.to_text().find("exhaustive") != std::string::npos);
  CHECK(to_string(Verdict::NoneFound) == "none_found");
  CHECK_THROWS_AS(run_suite("nope", FiniteChain(3), 2), LookupError);
  CHECK_THROWS_AS(run_suite("main2", FiniteChain(3), 1), DomainError);
}
