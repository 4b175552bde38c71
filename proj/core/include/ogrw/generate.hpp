#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "ogrw/boundary.hpp"
#include "ogrw/cospan.hpp"
#include "ogrw/graph.hpp"
#include "ogrw/rule.hpp"

namespace ogrw {

/// Deterministic seeded randomness for property tests and demos.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int upto(int n);  // uniform in [0, n)
    bool coin(double p = 0.5);
};

struct RandomGraphOptions {
    int max_vertices = 4;
    int max_bare_wires = 2;
    int max_circles = 1;
    int max_subdivisions = 3;
    int max_isolated = 0;
    double fuse_probability = 0.6;
};

/// A valid random open-graph: vertices with stub wires at every port, a
/// random set of output-to-input fusions (which may close cycles), plus
/// optional bare wires, circles and wire subdivisions.
OpenGraph random_graph(const SignaturePtr& sig, Rng& rng, const RandomGraphOptions& opts = {});

struct SubgraphPick {
    OpenGraph sub;     // standalone copy, ids shared with the host
    Morphism embed;    // inclusion into the host
};

/// A random sub-open-graph closed under vertex neighbourhoods (so the
/// inclusion is a vertex-full mono) and free of isolated points. May be
/// empty when the host has no structure to pick.
SubgraphPick random_subgraph(const OpenGraph& host, Rng& rng, bool want_nonempty = true);

/// A valid random graph whose ordered inputs/outputs realize exactly the
/// given words; requires the signature to offer 1->0 and 0->1 generators
/// for any type that needs balancing (the test signatures do). The boundary
/// order is set to the interface points in word order.
OpenGraph random_graph_with_interface(const SignaturePtr& sig, const Word& in_word,
                                      const Word& out_word, Rng& rng, int max_extra_vertices = 3);

/// A random rule whose lhs is a subgraph of `host`, together with its
/// matching. The rhs is a fresh random graph over the same interface.
struct RuleAt {
    Rule rule;
    Morphism match;
};
std::optional<RuleAt> random_rule_at(const OpenGraph& host, Rng& rng);

/// A random cospan, optionally with prescribed words.
Cospan random_cospan(const SignaturePtr& sig, Rng& rng,
                     const std::optional<Word>& dom = std::nullopt,
                     const std::optional<Word>& cod = std::nullopt);

/// A random plugging span between boundary points of g and h (outputs of
/// one side against inputs of the other), boundary-coherent by construction.
CoherentSpan random_plug_span(const OpenGraph& g, const OpenGraph& h, Rng& rng);

} // namespace ogrw
