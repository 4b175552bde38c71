#include "ogrw/rewrite.hpp"

#include "ogrw/error.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/match.hpp"

namespace ogrw {

RewriteResult apply_rewrite(const Rule& r, const OpenGraph& host, const Morphism& m) {
    Subtraction sub = subtract_with(host, r.lhs, m, r.boundary, r.to_lhs);

    CoherentSpan span;
    span.apex = r.boundary;
    span.left = sub.complement;
    span.right = r.rhs;
    span.to_left = sub.coboundary;
    span.to_right = r.to_rhs;
    MergeResult merged = plug(span);

    RewriteResult res;
    res.graph = std::move(merged.graph);
    res.replaced = std::move(merged.from_right);

    // rule boundary copies keyed by the lhs point they cover
    std::map<std::string, std::string> input_copy_of, output_copy_of;
    for (const auto& [bid, lp] : r.to_lhs.points)
        (r.lhs.is_input(lp) ? input_copy_of : output_copy_of)[lp] = bid;

    std::map<std::string, std::string> removed;  // host image -> lhs point
    for (const auto& [lp, hp] : m.points) removed[hp] = lp;

    auto track = [&](const std::string& x, bool as_input) -> std::string {
        auto it = removed.find(x);
        if (it == removed.end()) return x;  // survives with its own id
        const std::string& lp = it->second;
        const std::string& bid = as_input ? input_copy_of.at(lp) : output_copy_of.at(lp);
        return sub.coboundary.at_point(bid);  // left side of the plug keeps ids
    };
    for (const auto& x : host.inputs()) res.boundary_track[x] = track(x, true);
    for (const auto& x : host.outputs()) {
        auto [it, fresh] = res.boundary_track.emplace(x, track(x, false));
        (void)it;
        (void)fresh;  // isolated points are already present with the same image
    }
    return res;
}

bool rewrites_to(const OpenGraph& g, const OpenGraph& h, const RewriteSystem& sys) {
    for (const auto& [name, rule] : sys) {
        for (const auto& m : find_matchings(rule.lhs, g)) {
            if (isomorphic(apply_rewrite(rule, g, m).graph, h)) return true;
        }
    }
    return false;
}

Rule extend_rule(const Rule& r, const OpenGraph& host, const Morphism& m) {
    if (host.has_isolated_points())
        throw Error(ErrorCode::IsolatedPointInRule, "",
                    "cannot extend over a host with isolated points");
    RewriteResult rw = apply_rewrite(r, host, m);

    Rule ext;
    ext.lhs = host;
    ext.lhs.clear_boundary_order();
    ext.rhs = rw.graph;
    BoundaryMap bm = boundary(host);
    ext.boundary = bm.boundary;
    ext.to_lhs = bm.map;
    for (const auto& [bid, hp] : bm.map.points)
        ext.to_rhs.points[bid] = rw.boundary_track.at(hp);
    return ext;
}

Rule compose_rules_seq(const Rule& r1, const Rule& r2, const CoherentSpan& overlap) {
    MergeResult merged = merge(overlap);
    const OpenGraph& mid = merged.graph;

    RewriteResult undo = apply_rewrite(reverse_rule(r1), mid, merged.from_left);
    RewriteResult redo = apply_rewrite(r2, mid, merged.from_right);

    Rule composite;
    composite.lhs = undo.graph;
    composite.rhs = redo.graph;
    BoundaryMap bm = boundary(mid);
    composite.boundary = bm.boundary;
    for (const auto& [bid, mp] : bm.map.points) {
        composite.to_lhs.points[bid] = undo.boundary_track.at(mp);
        composite.to_rhs.points[bid] = redo.boundary_track.at(mp);
    }
    validate_rule(composite);
    return composite;
}

} // namespace ogrw
