#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ogrw/graph.hpp"
#include "ogrw/morphism.hpp"
#include "ogrw/rule.hpp"

namespace ogrw {

/// A maximal chain or circle of connected edge-points, with its endpoint
/// metadata. An isolated point forms a degenerate one-point wire.
struct Wire {
    std::vector<std::string> points;  // chain order; circles start at the smallest id
    std::vector<std::string> edges;   // between consecutive points (closing edge last for circles)
    bool circle = false;
    std::string type;
    std::optional<std::string> src_vertex;  // vertex feeding the first point
    std::optional<std::string> src_edge;
    std::optional<std::string> tgt_vertex;  // vertex drained by the last point
    std::optional<std::string> tgt_edge;
};

/// Partition of all edge-points of g into wires, ordered by smallest point id.
std::vector<Wire> wires(const OpenGraph& g);

/// The edge-homeomorphism system for a signature: per object a line
/// contraction (3-point chain => 2-point chain) and a circle contraction
/// (2-point circle => 1-point circle), plus per generator port an in-wire
/// and an out-wire contraction (2 edge-points at the port => 1). Applied
/// left to right these remove intermediate edge-points; right to left they
/// subdivide wires.
RewriteSystem homeo_rules(const SignaturePtr& sig);

struct SubdivideInfo {
    std::string point;
    std::string first_edge;
    std::string second_edge;
};

/// Splits one edge by a fresh edge-point (a single wire subdivision).
OpenGraph subdivide_edge(const OpenGraph& g, const std::string& edge_id,
                         SubdivideInfo* info = nullptr);

/// Contracts to the homeomorphism normal form using the deterministic
/// lowest-point-id redex. Per wire the result keeps exactly 1 edge-point
/// between two vertices, 1 on a vertex-boundary wire, 2 on a
/// boundary-boundary wire and 1 on a circle. `steps_out` reports the number
/// of contractions performed.
OpenGraph normalize(const OpenGraph& g, std::size_t* steps_out = nullptr);

/// As normalize but picking each redex uniformly at random; used to check
/// confluence.
OpenGraph normalize_random(const OpenGraph& g, std::mt19937_64& rng,
                           std::size_t* steps_out = nullptr);

struct ExpandedMatch {
    OpenGraph host;                 // a wire-expanded normal form of g
    std::vector<Morphism> matches;  // embeddings of the rule's lhs into host
};

/// Matches a rule modulo wire subdivision. The host is contracted to its
/// normal form; candidate re-expansions are derived from where the lhs
/// could land (vertex-to-vertex lhs wires pin a host wire to their exact
/// length, dangling and bare lhs wires add room on the wire they occupy),
/// and plain matchings are enumerated against each candidate. Every
/// returned host is homeomorphic to g; matchings may recur against
/// different expansions.
std::vector<ExpandedMatch> match_modulo_homeo(const Rule& r, const OpenGraph& g);

} // namespace ogrw
