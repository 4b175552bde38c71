#include "ogrw/boundary.hpp"

#include <set>

#include "ogrw/error.hpp"

namespace ogrw {

BoundaryMap boundary(const OpenGraph& g) {
    BoundaryMap bm;
    bm.boundary = OpenGraph(g.sig_ptr());
    auto taken = [&](const std::string& id) { return bm.boundary.has_point(id); };
    for (const auto& pid : g.inputs()) {
        std::string bid = fresh_id(pid + ":i", taken);
        bm.boundary.add_edge_point(bid, g.point(pid).label);
        bm.map.points[bid] = pid;
        bm.input_copies.push_back(bid);
    }
    for (const auto& pid : g.outputs()) {
        std::string bid = fresh_id(pid + ":o", taken);
        bm.boundary.add_edge_point(bid, g.point(pid).label);
        bm.map.points[bid] = pid;
        bm.output_copies.push_back(bid);
    }
    return bm;
}

bool is_boundary_coherent(const CoherentSpan& s) {
    if (!is_mono(s.to_left) || !is_mono(s.to_right)) return false;
    for (const auto& [pid, p] : s.apex.points()) {
        if (p.is_vertex()) continue;
        const std::string& lp = s.to_left.at_point(pid);
        const std::string& rp = s.to_right.at_point(pid);
        if (s.apex.in_edges(pid).empty()) {
            if (!s.left.in_edges(lp).empty() && !s.right.in_edges(rp).empty()) return false;
        }
        if (s.apex.out_edges(pid).empty()) {
            if (!s.left.out_edges(lp).empty() && !s.right.out_edges(rp).empty()) return false;
        }
    }
    return true;
}

MergeResult merge(const CoherentSpan& s) {
    if (!(s.left.sig() == s.right.sig()) || !(s.apex.sig() == s.left.sig()))
        throw Error(ErrorCode::TypeMismatch, "", "merge requires one shared signature");
    check_morphism(s.apex, s.left, s.to_left);
    check_morphism(s.apex, s.right, s.to_right);
    if (!is_mono(s.to_left) || !is_mono(s.to_right))
        throw Error(ErrorCode::NotCoherent, "", "merge legs must be injective");
    if (!is_boundary_coherent(s))
        throw Error(ErrorCode::NotCoherent, "",
                    "gluing would give an edge-point two in-edges or two out-edges");

    // identify to_left(k) with to_right(k); classes have at most one element
    // per side because the legs are monos
    std::map<std::string, std::string> right_point_to_left;
    std::map<std::string, std::string> right_edge_to_left;
    for (const auto& [k, lp] : s.to_left.points)
        right_point_to_left[s.to_right.at_point(k)] = lp;
    for (const auto& [k, le] : s.to_left.edges)
        right_edge_to_left[s.to_right.at_edge(k)] = le;

    MergeResult res;
    res.graph = OpenGraph(s.left.sig_ptr());
    res.from_left = identity_morphism(s.left);

    for (const auto& [id, p] : s.left.points()) {
        if (p.is_vertex())
            res.graph.add_vertex(id, p.label);
        else
            res.graph.add_edge_point(id, p.label);
    }
    for (const auto& [id, p] : s.right.points()) {
        auto it = right_point_to_left.find(id);
        if (it != right_point_to_left.end()) {
            res.from_right.points[id] = it->second;
            continue;
        }
        std::string nid =
            fresh_id(id, [&](const std::string& x) { return res.graph.has_point(x); });
        if (p.is_vertex())
            res.graph.add_vertex(nid, p.label);
        else
            res.graph.add_edge_point(nid, p.label);
        res.from_right.points[id] = nid;
    }

    for (const auto& [id, e] : s.left.edges())
        res.graph.add_edge(id, e.src, e.tgt, e.type, e.src_port, e.tgt_port);
    for (const auto& [id, e] : s.right.edges()) {
        auto it = right_edge_to_left.find(id);
        if (it != right_edge_to_left.end()) {
            res.from_right.edges[id] = it->second;
            continue;
        }
        std::string nid = fresh_id(id, [&](const std::string& x) { return res.graph.has_edge(x); });
        res.graph.add_edge(nid, res.from_right.at_point(e.src), res.from_right.at_point(e.tgt),
                           e.type, e.src_port, e.tgt_port);
        res.from_right.edges[id] = nid;
    }

    validate_graph(res.graph);
    return res;
}

MergeResult plug(const CoherentSpan& s) {
    if (!s.apex.is_point_graph())
        throw Error(ErrorCode::ApexNotPointGraph, "", "plugging requires a point-graph apex");
    return merge(s);
}

Subtraction subtract_with(const OpenGraph& host, const OpenGraph& sub, const Morphism& m,
                          const OpenGraph& bgraph, const Morphism& b, const std::string& salt) {
    if (sub.has_isolated_points())
        throw Error(ErrorCode::HasIsolatedPoints, "",
                    "cannot subtract a graph with isolated points");
    if (!is_mono(m)) throw Error(ErrorCode::NotMatching, "", "matching must be injective");
    try {
        check_morphism(sub, host, m);
        check_morphism(bgraph, sub, b);
    } catch (const Error& e) {
        throw Error(ErrorCode::NotMatching, e.item(), e.what());
    }
    if (!bgraph.is_point_graph() || !is_mono(b))
        throw Error(ErrorCode::NotMatching, "", "boundary span must be a mono from a point-graph");

    // classify the provided boundary copies and check they cover In/Out(sub)
    std::map<std::string, std::string> input_copy_of;   // In(sub) point -> B id
    std::map<std::string, std::string> output_copy_of;  // Out(sub) point -> B id
    for (const auto& [bid, target] : b.points) {
        bool in = sub.is_input(target);
        bool out = sub.is_output(target);
        if (!in && !out)
            throw Error(ErrorCode::NotMatching, bid, "boundary copy maps to an interior point");
        auto& slot = in ? input_copy_of : output_copy_of;
        if (!slot.emplace(target, bid).second)
            throw Error(ErrorCode::NotMatching, bid, "two boundary copies cover one side");
    }
    for (const auto& pid : sub.inputs())
        if (!input_copy_of.count(pid))
            throw Error(ErrorCode::NotMatching, pid, "input not covered by the boundary span");
    for (const auto& pid : sub.outputs())
        if (!output_copy_of.count(pid))
            throw Error(ErrorCode::NotMatching, pid, "output not covered by the boundary span");

    std::set<std::string> removed_points, removed_edges;
    for (const auto& [id, img] : m.points) removed_points.insert(img);
    for (const auto& [id, img] : m.edges) removed_edges.insert(img);
    std::map<std::string, std::string> sub_point_of;  // host image -> sub point
    for (const auto& [id, img] : m.points) sub_point_of[img] = id;

    Subtraction out;
    out.boundary = bgraph;
    out.to_sub = b;
    out.complement = OpenGraph(host.sig_ptr());

    for (const auto& [id, p] : host.points()) {
        if (removed_points.count(id)) continue;
        if (p.is_vertex())
            out.complement.add_vertex(id, p.label);
        else
            out.complement.add_edge_point(id, p.label);
    }
    for (const auto& [bid, target] : b.points) {
        std::string nid = fresh_id(
            bid + salt, [&](const std::string& x) { return out.complement.has_point(x); });
        out.complement.add_edge_point(nid, bgraph.point(bid).label);
        out.coboundary.points[bid] = nid;
    }

    for (const auto& [id, e] : host.edges()) {
        if (removed_edges.count(id)) continue;
        std::string src = e.src;
        std::string tgt = e.tgt;
        auto src_port = e.src_port;
        auto tgt_port = e.tgt_port;
        if (auto it = sub_point_of.find(src); it != sub_point_of.end()) {
            // a surviving edge can leave the image only at an output of sub
            src = out.coboundary.at_point(output_copy_of.at(it->second));
            src_port.reset();
        }
        if (auto it = sub_point_of.find(tgt); it != sub_point_of.end()) {
            tgt = out.coboundary.at_point(input_copy_of.at(it->second));
            tgt_port.reset();
        }
        out.complement.add_edge(id, src, tgt, e.type, src_port, tgt_port);
    }

    validate_graph(out.complement);
    return out;
}

Subtraction subtract(const OpenGraph& host, const OpenGraph& sub, const Morphism& m,
                     const std::string& salt) {
    BoundaryMap bm = boundary(sub);
    return subtract_with(host, sub, m, bm.boundary, bm.map, salt);
}

} // namespace ogrw
