#pragma once

#include <vector>

#include "chainops/chain.hpp"

namespace chainops {

/// F(x_1, ..., x_n) = the argument ranked highest by `ord`.
OpTable max_wrt(const LinearOrdering& ord, int n);

/// F(x_1, ..., x_n) = G(min x_i, max x_i) for a binary table G.
OpTable lift_binary(const OpTable& binary, int n);

/// G(x, y) = F((n-1).x, y).
OpTable reduce_binary(const OpTable& op);

/// Reads x <= y iff H(x, y) = y off a quasitrivial associative binary table.
/// Throws PreconditionError if H is not quasitrivial/associative and
/// StructureError (naming the offending pair or triple) if the relation is not a linear order.
LinearOrdering order_from_binary(const OpTable& binary);

/// All orderings single-peaked w.r.t. the natural order, depth first: a_1
/// ascending, then at each step the nearest free element below the current
/// interval before the one above. 2^(k-1) results.
std::vector<LinearOrdering> enumerate_single_peaked(const FiniteChain& chain);

/// One level set of a contour plot, in the order it was created.
struct ContourClass {
  Element value;
  std::vector<TupleCode> points;
};

struct ContourPlot {
  OpTable table;
  LinearOrdering ordering;
  std::vector<ContourClass> classes;
};

/// Builds the contour plot of an idempotent n-ary uninorm from k-1 choice bits.
/// Bit i (0-based) decides whether a_{i+2} extends the current interval
/// downward (false) or upward (true); a_1 is 1 + the number of downward bits,
/// so every bit string is realizable and the 2^(k-1) strings give distinct plots.
ContourPlot contour_construct(const FiniteChain& chain, int n, const std::vector<bool>& choices);

/// Inverse of contour_construct's addressing: the bits producing a single-peaked ordering.
std::vector<bool> contour_choices(const LinearOrdering& ord);

/// The extension of g to all of 1..k used by from_gmap.
std::vector<Element> gbar(const GMap& gm);

/// The idempotent n-ary uninorm with neutral element e described by g.
OpTable from_gmap(const GMap& gm, int n);

/// The g-map of an idempotent n-ary uninorm (n >= 2); PreconditionError names the missing property.
GMap gmap_of(const OpTable& op);

/// Every valid g-map on the chain with the given neutral element, lexicographic in (g(1), ..., g(e)).
std::vector<GMap> enumerate_gmaps(const FiniteChain& chain, Element e);

/// F(x_1, ..., x_n) = x_1 o x_2 o ... o x_n (left fold) for an associative binary table.
OpTable iterate_binary(const OpTable& binary, int n);

/// H(x, y) = F(x, (n-2).e, y) with e the least neutral element of an associative F.
OpTable neutral_reduction(const OpTable& op);

}  // namespace chainops
