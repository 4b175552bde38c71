#pragma once

#include <vector>

#include "ogrw/graph.hpp"
#include "ogrw/morphism.hpp"

namespace ogrw {

/// Enumerates every injective, vertex-full, label/port/type-preserving
/// embedding of `pattern` into `host`, in deterministic (sorted) order.
/// Both graphs must be validated.
std::vector<Morphism> find_matchings(const OpenGraph& pattern, const OpenGraph& host);

} // namespace ogrw
