#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainops/chain.hpp"

namespace chainops {

/// Counterexample data. The meaning of each field depends on the property;
/// replay_witness() knows how to re-evaluate it.
struct Witness {
  std::vector<Tuple> tuples;
  std::vector<Element> values;
  std::vector<int> positions;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
  std::string name;
  bool holds = true;
  std::optional<Witness> witness;

  /// `PROP <name> HOLDS` or `PROP <name> FAILS args=... at=... got=...`
  std::string to_line() const;
};

/// Upper bound on the number of n x n matrices scanned by the (ultra)bisymmetry checks.
struct MatrixGuard {
  std::uint64_t max_matrices = std::uint64_t{1} << 24;
};

// Every scan reports the first violation in TupleCode order (then by
// position), so witnesses are deterministic.

PropertyReport is_idempotent(const OpTable& op);
PropertyReport is_quasitrivial(const OpTable& op);
PropertyReport is_symmetric(const OpTable& op);
PropertyReport is_nondecreasing(const OpTable& op);
/// Vacuously holds for arity 1.
PropertyReport is_associative(const OpTable& op);
/// Throws ResourceError when k^(n*n) exceeds the guard.
PropertyReport is_bisymmetric(const OpTable& op, MatrixGuard guard = {});
PropertyReport is_ultrabisymmetric(const OpTable& op, MatrixGuard guard = {});
PropertyReport is_surjective(const OpTable& op);

std::vector<Element> neutral_elements(const OpTable& op);
/// Tuples whose value is attained nowhere else.
std::vector<Tuple> isolated_points(const OpTable& op);

/// For every x, y some threshold j in 1..n has F((j-1).x, (n-j+1).y) = y and
/// F(j.x, (n-j).y) = x. Requires a quasitrivial table (PreconditionError otherwise).
PropertyReport check_threshold_switch(const OpTable& op);

/// The middle of any three elements is never ranked last.
PropertyReport is_single_peaked(const LinearOrdering& ord);
/// Every down-set {x : x <= t} is an interval of 1..k.
PropertyReport single_peaked_via_convexity(const LinearOrdering& ord);
/// With x0 the least element of the ordering: x0 < x1 < x2 or x2 < x1 < x0 implies x1 precedes x2.
PropertyReport single_peaked_via_sisd(const LinearOrdering& ord);

/// Re-evaluates a failing report's witness against `op`; true iff it still refutes the property.
bool replay_witness(const OpTable& op, const PropertyReport& report);
bool replay_witness(const LinearOrdering& ord, const PropertyReport& report);

/// Runs the named table property ("idempotent", "quasitrivial", ...).
PropertyReport check_property(const OpTable& op, const std::string& name, MatrixGuard guard = {});
const std::vector<std::string>& table_property_names();

}  // namespace chainops
