#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "chainops/chain.hpp"

namespace chainops {

// NOP v1:
//
//   NOP 1
//   k=<k> n=<n>
//   <k^n values in TupleCode order>
//
// Lines starting with '#' are comments. Values are written one row of k per
// line (last argument varying fastest); readers accept any whitespace.

std::string write_nop(const OpTable& op);
OpTable parse_nop(std::string_view text);
OpTable read_nop_file(const std::filesystem::path& path);
void write_nop_file(const std::filesystem::path& path, const OpTable& op);

/// "3,2,4,1"
std::string format_ordering(const LinearOrdering& ord);
LinearOrdering parse_ordering(std::string_view text);

/// "e=3; g=4,3,3"
std::string format_gmap(const GMap& gm);
GMap parse_gmap(const FiniteChain& chain, std::string_view text);

/// Comma separated positive integers, e.g. "4,3,3".
std::vector<Element> parse_element_list(std::string_view text);

}  // namespace chainops
