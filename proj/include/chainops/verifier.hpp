#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chainops/chain.hpp"
#include "chainops/properties.hpp"

namespace chainops {

/// Structural restrictions applied while enumerating operation tables.
struct Constraint {
  bool quasitrivial = false;   // each cell chooses among its own arguments
  bool symmetric = false;      // one cell per multiset of arguments
  bool nondecreasing = false;  // pruned during the search
  bool idempotent = false;     // diagonal fixed
  bool has_neutral = false;    // filtered at the leaves

  std::string label() const;
};

inline constexpr std::uint64_t kDefaultEnumerationGuard = 100'000'000;

/// Product of per-cell candidate counts: exact without `nondecreasing` or `has_neutral`,
/// an upper bound otherwise.
long double estimate_population(const FiniteChain& chain, int n, const Constraint& c);

/// Visits every table satisfying `c` exactly once: cells in TupleCode order,
/// candidate values ascending. Stops early when `visit` returns false.
/// Throws ResourceError when the estimate (for searches without pruning) or
/// the number of explored search nodes exceeds `guard`.
void for_each_op(const FiniteChain& chain, int n, const Constraint& c,
                 const std::function<bool(const OpTable&)>& visit,
                 std::uint64_t guard = kDefaultEnumerationGuard);

std::vector<OpTable> enumerate_ops(const FiniteChain& chain, int n, const Constraint& c,
                                   std::uint64_t guard = kDefaultEnumerationGuard);

/// Quasitrivial, symmetric, nondecreasing tables that are also associative.
std::vector<OpTable> enumerate_uninorms(const FiniteChain& chain, int n,
                                        std::uint64_t guard = kDefaultEnumerationGuard);
std::uint64_t count_uninorms(const FiniteChain& chain, int n,
                             std::uint64_t guard = kDefaultEnumerationGuard);

enum class Verdict { Holds, Fails, NoneFound, Found };
std::string to_string(Verdict v);

struct SuiteOptions {
  int jobs = 1;
  std::uint64_t enumeration_guard = kDefaultEnumerationGuard;
  /// Above this estimated size a suite falls back to its next, narrower population.
  std::uint64_t population_cap = std::uint64_t{1} << 16;
  MatrixGuard matrix_guard{};
  /// Number of random tables drawn when no exhaustive population is feasible.
  std::uint64_t samples = 10'000;
  /// Refuse to sample: infeasible scales raise ResourceError instead.
  bool exhaustive_only = false;
  /// Drop one hypothesis of the statement; the suite is then expected to fail.
  bool relax_hypothesis = false;
  std::uint64_t seed = 0x5eed;
};

struct SuiteReport {
  std::string suite;
  int k = 0;
  int n = 0;
  std::uint64_t population = 0;
  std::string population_label;
  bool exhaustive = true;
  bool relaxed = false;
  Verdict verdict = Verdict::Holds;
  std::optional<OpTable> counterexample_table;
  std::optional<LinearOrdering> counterexample_ordering;
  std::string counterexample;
  std::string note;
  double seconds = 0.0;

  /// Holds (Fails for a relaxed run) is the predicted verdict; open searches always match.
  bool matches_claim() const;
  /// `SUITE <name> k=<k> n=<n> pop=<p> verdict=<v>`
  std::string to_line() const;
  std::string to_text() const;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite on L_k with arity n. `marmaytor` forces n = 2; the
/// ordering suites (`bl56`, `sp_equiv`) scan all k! orderings.
SuiteReport run_suite(const std::string& name, const FiniteChain& chain, int n,
                      const SuiteOptions& options = {});

/// Re-checks a reported counterexample table or ordering against the suite's
/// per-item condition; true iff it still fails. False when there is nothing to replay.
bool replay_counterexample(const SuiteReport& report, const SuiteOptions& options = {});

}  // namespace chainops
