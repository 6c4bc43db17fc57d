#pragma once

#include <string>
#include <vector>

#include "chainops/chain.hpp"
#include "chainops/constructors.hpp"

namespace chainops {

/// Level sets ordered by (size, value); for a max table this is the order
/// in which the contour construction adds them.
std::vector<ContourClass> level_sets(const OpTable& op);

/// Grid of values for n = 2 (first argument as rows, bottom to top) or one
/// grid per value of x1 for n = 3, then a legend of level sets and isolated
/// points. Other arities throw PreconditionError.
std::string render_ascii(const OpTable& op);

/// Dots at lattice points, one polyline per level set through its points in
/// lexicographic order, value labels. Same arity rule as render_ascii.
std::string render_svg(const OpTable& op);

}  // namespace chainops
