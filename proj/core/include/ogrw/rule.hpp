#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ogrw/graph.hpp"
#include "ogrw/morphism.hpp"

namespace ogrw {

/// A rewrite rule: lhs and rhs sharing a boundary point-graph through a
/// span of monos. Neither side may contain isolated points.
struct Rule {
    OpenGraph lhs;
    OpenGraph rhs;
    OpenGraph boundary;  // point-graph B
    Morphism to_lhs;     // B -> lhs
    Morphism to_rhs;     // B -> rhs

    bool operator==(const Rule&) const = default;
};

/// Builds the shared-boundary span from explicit input/output
/// correspondences (pairs of lhs point, rhs point). The correspondences
/// must be type-compatible bijections In(lhs) <-> In(rhs) and
/// Out(lhs) <-> Out(rhs).
Rule make_rule(const OpenGraph& lhs, const OpenGraph& rhs,
               const std::vector<std::pair<std::string, std::string>>& input_map,
               const std::vector<std::pair<std::string, std::string>>& output_map);

/// Checks the Rule invariants (used for rules built by other paths).
void validate_rule(const Rule& r);

/// Flips the span. Involutive.
Rule reverse_rule(const Rule& r);

/// A named set of rewrite rules.
using RewriteSystem = std::map<std::string, Rule>;

} // namespace ogrw
