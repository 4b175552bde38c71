#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogrw/boundary.hpp"
#include "ogrw/graph.hpp"
#include "ogrw/morphism.hpp"
#include "ogrw/rule.hpp"

namespace ogrw {

struct RewriteResult {
    OpenGraph graph;
    /// Where each boundary point of the host ended up; rewriting preserves
    /// the boundary, so this is a type-preserving bijection onto the
    /// boundary of `graph`.
    std::map<std::string, std::string> boundary_track;
    /// Embedding of the rule's rhs into `graph`.
    Morphism replaced;
};

/// Double-pushout step: subtract the matched lhs, then plug the rhs back in
/// along the rule's boundary span. `m` must be an injective vertex-full
/// embedding of r.lhs into the host.
RewriteResult apply_rewrite(const Rule& r, const OpenGraph& host, const Morphism& m);

/// One-step reachability: true iff some rule of the system rewrites g to a
/// graph isomorphic to h.
bool rewrites_to(const OpenGraph& g, const OpenGraph& h, const RewriteSystem& sys);

/// The rule host -> host[lhs=>rhs]_m over the host's own boundary. The host
/// must have no isolated points.
Rule extend_rule(const Rule& r, const OpenGraph& host, const Morphism& m);

/// Sequential composition of r1 and r2 over a boundary-coherent overlap
/// span from K into r1.rhs and r2.lhs: merge the two sides, undo r1 to the
/// left, apply r2 to the right, and induce the boundary span of the merged
/// graph on both results.
Rule compose_rules_seq(const Rule& r1, const Rule& r2, const CoherentSpan& overlap);

struct DerivationStep {
    std::string rule;
    bool forward = true;
    OpenGraph host;      // the (possibly wire-expanded) graph the match embeds into
    Morphism match;      // rule lhs -> host
    OpenGraph result;    // normalized outcome of the step
};

struct Derivation {
    std::vector<DerivationStep> steps;
};

enum class DeriveStatus { Found, NotFound, DepthExceeded };

struct DeriveResult {
    DeriveStatus status = DeriveStatus::NotFound;
    Derivation derivation;
};

/// Breadth-first search for a rewrite path from `from` to `to` under the
/// system, matching modulo wire subdivision and deduplicating states by
/// their normal forms up to isomorphism. NotFound means the reachable set
/// was exhausted; DepthExceeded means the frontier was still growing.
DeriveResult derive(const OpenGraph& from, const OpenGraph& to, const RewriteSystem& sys,
                    int max_depth, bool allow_reverse = false);

} // namespace ogrw
