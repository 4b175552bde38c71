#pragma once

#include <map>
#include <optional>
#include <string>

#include "ogrw/graph.hpp"
#include "ogrw/morphism.hpp"

namespace ogrw {

/// Searches for a label/port/structure-preserving bijection g -> h by
/// backtracking with label and degree pruning, visiting candidates in sorted
/// id order (deterministic). With respect_boundary_order set, input_order
/// and output_order must be present on both graphs and are matched
/// pointwise. `seed` forces partial point assignments; the search extends
/// them or fails.
std::optional<Morphism> find_isomorphism(const OpenGraph& g, const OpenGraph& h,
                                         bool respect_boundary_order = false,
                                         const std::map<std::string, std::string>& seed = {});

bool isomorphic(const OpenGraph& g, const OpenGraph& h, bool respect_boundary_order = false);

} // namespace ogrw
