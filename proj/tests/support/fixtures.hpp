#pragma once

#include <string>

#include "ogrw/generate.hpp"
#include "ogrw/graph.hpp"
#include "ogrw/rule.hpp"
#include "ogrw/valuation.hpp"

namespace ogrw::testing {

/// Two-object signature with enough generator variety for random
/// constructions, including the single-legged generators the interface
/// balancer needs.
inline SignaturePtr test_sig() {
    static SignaturePtr sig = make_signature(
        {"a", "b"}, {
                        {"f", {{"a"}, {"b"}}},
                        {"g2", {{"a", "b"}, {"a"}}},
                        {"h2", {{"b"}, {"a", "a"}}},
                        {"cap_a", {{"a"}, {}}},
                        {"cup_a", {{}, {"a"}}},
                        {"cap_b", {{"b"}, {}}},
                        {"cup_b", {{}, {"b"}}},
                    });
    return sig;
}

inline SignaturePtr bool_sig() {
    static SignaturePtr sig = bool_signature();
    return sig;
}

/// i -> not -> o
inline OpenGraph not_wire() {
    OpenGraph g(bool_sig());
    g.add_edge_point("i", "B");
    g.add_edge_point("o", "B");
    g.add_vertex("v", "not");
    g.add_edge("e0", "i", "v", "B", std::nullopt, 0);
    g.add_edge("e1", "v", "o", "B", 0, std::nullopt);
    return g;
}

/// the box with a self-loop through two edge-points (the circles host)
inline OpenGraph loop_host() {
    OpenGraph g(bool_sig());
    g.add_vertex("v", "not");
    g.add_edge_point("s", "B");
    g.add_edge_point("t", "B");
    g.add_edge("e0", "s", "v", "B", std::nullopt, 0);
    g.add_edge("e1", "v", "t", "B", 0, std::nullopt);
    g.add_edge("e2", "t", "s", "B");
    return g;
}

/// box-to-wire over the one 1->1 boolean generator
inline Rule rule_drop() {
    OpenGraph rhs(bool_sig());
    rhs.add_edge_point("i", "B");
    rhs.add_edge_point("o", "B");
    rhs.add_edge("e", "i", "o", "B");
    return make_rule(not_wire(), rhs, {{"i", "i"}}, {{"o", "o"}});
}

/// a chain of n edge-points of type B
inline OpenGraph chain(int n, const SignaturePtr& sig = bool_sig(),
                       const std::string& type = "B") {
    OpenGraph g(sig);
    for (int i = 0; i < n; ++i) g.add_edge_point("p" + std::to_string(i), type);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge("e" + std::to_string(i), "p" + std::to_string(i), "p" + std::to_string(i + 1),
                   type);
    return g;
}

/// a circle through n edge-points
inline OpenGraph circle(int n, const SignaturePtr& sig = bool_sig(),
                        const std::string& type = "B") {
    OpenGraph g(sig);
    for (int i = 0; i < n; ++i) g.add_edge_point("p" + std::to_string(i), type);
    for (int i = 0; i < n; ++i)
        g.add_edge("e" + std::to_string(i), "p" + std::to_string(i),
                   "p" + std::to_string((i + 1) % n), type);
    return g;
}

/// structure-preserving copy with every id suffixed, for isomorphism tests
inline OpenGraph rename_points(const OpenGraph& g, const std::string& suffix) {
    OpenGraph out(g.sig_ptr());
    for (const auto& [id, p] : g.points()) {
        if (p.is_vertex())
            out.add_vertex(id + suffix, p.label);
        else
            out.add_edge_point(id + suffix, p.label);
    }
    for (const auto& [id, e] : g.edges())
        out.add_edge(id + suffix, e.src + suffix, e.tgt + suffix, e.type, e.src_port, e.tgt_port);
    if (g.input_order()) {
        std::vector<std::string> in, outs;
        for (const auto& x : *g.input_order()) in.push_back(x + suffix);
        for (const auto& x : *g.output_order()) outs.push_back(x + suffix);
        out.set_boundary_order(in, outs);
    }
    return out;
}

} // namespace ogrw::testing
