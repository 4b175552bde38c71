#include <deque>

#include "ogrw/homeo.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/rewrite.hpp"

namespace ogrw {

namespace {

struct Node {
    OpenGraph graph;  // normal form
    int parent = -1;
    DerivationStep step;
    int depth = 0;
};

Derivation path_to(const std::vector<Node>& nodes, int idx) {
    Derivation d;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) d.steps.push_back(nodes[i].step);
    std::reverse(d.steps.begin(), d.steps.end());
    return d;
}

} // namespace

DeriveResult derive(const OpenGraph& from, const OpenGraph& to, const RewriteSystem& sys,
                    int max_depth, bool allow_reverse) {
    OpenGraph goal = normalize(to);
    std::vector<Node> nodes;
    nodes.push_back(Node{normalize(from), -1, {}, 0});
    if (isomorphic(nodes.front().graph, goal)) return {DeriveStatus::Found, {}};

    std::deque<int> frontier{0};
    bool depth_capped = false;

    while (!frontier.empty()) {
        int idx = frontier.front();
        frontier.pop_front();
        if (nodes[idx].depth >= max_depth) {
            depth_capped = true;
            continue;
        }
        for (const auto& [name, rule] : sys) {
            for (bool forward : {true, false}) {
                if (!forward && !allow_reverse) continue;
                Rule oriented = forward ? rule : reverse_rule(rule);
                for (const auto& em : match_modulo_homeo(oriented, nodes[idx].graph)) {
                for (const auto& m : em.matches) {
                    OpenGraph next = normalize(apply_rewrite(oriented, em.host, m).graph);
                    bool seen = false;
                    for (const auto& n : nodes)
                        if (isomorphic(n.graph, next)) {
                            seen = true;
                            break;
                        }
                    if (seen) continue;
                    DerivationStep step{name, forward, em.host, m, next};
                    nodes.push_back(
                        Node{std::move(next), idx, std::move(step), nodes[idx].depth + 1});
                    if (isomorphic(nodes.back().graph, goal)) {
                        return {DeriveStatus::Found,
                                path_to(nodes, static_cast<int>(nodes.size()) - 1)};
                    }
                    frontier.push_back(static_cast<int>(nodes.size()) - 1);
                }
                }
            }
        }
    }
    return {depth_capped ? DeriveStatus::DepthExceeded : DeriveStatus::NotFound, {}};
}

} // namespace ogrw
