#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainops/chain.hpp"

namespace chainops {

/// A named example operation with the verdicts it is known to produce.
struct GalleryEntry {
  std::string name;
  std::string description;
  OpTable op;
  std::map<std::string, bool> expected;
  std::optional<std::vector<Element>> expected_neutral;
  std::optional<std::vector<Tuple>> expected_isolated;
};

/// Size overrides; only `median3` reads k (2..4) and only `projection_first` reads n (2..3).
struct GalleryParams {
  std::optional<int> k;
  std::optional<int> n;
};

const std::vector<std::string>& gallery_names();

/// Throws LookupError listing valid names for an unknown name, DomainError for out-of-range params.
GalleryEntry gallery_get(const std::string& name, const GalleryParams& params = {});

}  // namespace chainops
