#pragma once

#include <string>
#include <vector>

#include "ogrw/graph.hpp"
#include "ogrw/morphism.hpp"

namespace ogrw {

/// The boundary graph of G — one point per input plus one per output, so
/// two points for each isolated point — with its canonical map into G.
struct BoundaryMap {
    OpenGraph boundary;   // point-graph B
    Morphism map;         // b : B -> G
    std::vector<std::string> input_copies;   // B ids covering In(G), ordered by G point id
    std::vector<std::string> output_copies;  // B ids covering Out(G), ordered by G point id
};

BoundaryMap boundary(const OpenGraph& g);

/// A span of monos out of a shared apex.
struct CoherentSpan {
    OpenGraph apex;
    OpenGraph left;
    OpenGraph right;
    Morphism to_left;
    Morphism to_right;
};

/// True iff gluing along the span can never give an edge-point two in-edges
/// or two out-edges: for every input of the apex at most one of its two
/// images carries an in-edge, and dually for outputs. Legs are assumed
/// checked monos.
bool is_boundary_coherent(const CoherentSpan& s);

struct MergeResult {
    OpenGraph graph;
    Morphism from_left;   // pushout injection, identity on ids
    Morphism from_right;
};

/// Pushout of a boundary-coherent span, computed as the quotient of the
/// disjoint union by to_left(k) ~ to_right(k). Identified elements keep the
/// left-side id; right-only elements keep their id unless it clashes.
MergeResult merge(const CoherentSpan& s);

/// Merging over a point-graph apex: wires outputs to inputs.
MergeResult plug(const CoherentSpan& s);

struct Subtraction {
    OpenGraph boundary;   // point-graph B
    Morphism to_sub;      // b : B -> K
    OpenGraph complement; // H = host - K
    Morphism coboundary;  // c : B -> H
};

/// Removes the image of `m : sub -> host` and re-introduces sub's boundary
/// as fresh points of the complement; edges that lose an endpoint are
/// rerouted to the matching boundary copy. `m` must be a mono, full on
/// vertices; `sub` must have no isolated points. `salt` varies the fresh-id
/// allocation without affecting the result up to isomorphism.
Subtraction subtract(const OpenGraph& host, const OpenGraph& sub, const Morphism& m,
                     const std::string& salt = "");

/// As subtract, but reuses a caller-provided boundary span b : B -> sub
/// (e.g. a rewrite rule's), so the coboundary is expressed over that B.
Subtraction subtract_with(const OpenGraph& host, const OpenGraph& sub, const Morphism& m,
                          const OpenGraph& bgraph, const Morphism& b,
                          const std::string& salt = "");

} // namespace ogrw
