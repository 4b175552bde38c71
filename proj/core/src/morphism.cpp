#include "ogrw/morphism.hpp"

#include <set>

#include "ogrw/error.hpp"

namespace ogrw {

const std::string& Morphism::at_point(const std::string& id) const {
    auto it = points.find(id);
    if (it == points.end())
        throw Error(ErrorCode::NotStructurePreserving, id, "point not mapped");
    return it->second;
}

const std::string& Morphism::at_edge(const std::string& id) const {
    auto it = edges.find(id);
    if (it == edges.end())
        throw Error(ErrorCode::NotStructurePreserving, id, "edge not mapped");
    return it->second;
}

Morphism identity_morphism(const OpenGraph& g) {
    Morphism f;
    for (const auto& [id, p] : g.points()) f.points[id] = id;
    for (const auto& [id, e] : g.edges()) f.edges[id] = id;
    return f;
}

void check_morphism(const OpenGraph& src, const OpenGraph& tgt, const Morphism& f) {
    for (const auto& [id, p] : src.points()) {
        auto it = f.points.find(id);
        if (it == f.points.end())
            throw Error(ErrorCode::NotStructurePreserving, id, "point not mapped");
        if (!tgt.has_point(it->second))
            throw Error(ErrorCode::NotStructurePreserving, id,
                        "image point '" + it->second + "' missing in target");
        const Point& q = tgt.point(it->second);
        if (p.kind != q.kind || p.label != q.label)
            throw Error(ErrorCode::LabelMismatch, id,
                        "point label differs from image '" + it->second + "'");
    }
    for (const auto& [id, mapped] : f.points)
        if (!src.has_point(id))
            throw Error(ErrorCode::NotStructurePreserving, id, "mapped point not in source");

    for (const auto& [id, e] : src.edges()) {
        auto it = f.edges.find(id);
        if (it == f.edges.end())
            throw Error(ErrorCode::NotStructurePreserving, id, "edge not mapped");
        if (!tgt.has_edge(it->second))
            throw Error(ErrorCode::NotStructurePreserving, id,
                        "image edge '" + it->second + "' missing in target");
        const Edge& img = tgt.edge(it->second);
        if (img.src != f.at_point(e.src) || img.tgt != f.at_point(e.tgt))
            throw Error(ErrorCode::NotStructurePreserving, id,
                        "edge image does not commute with src/tgt");
        if (img.type != e.type)
            throw Error(ErrorCode::LabelMismatch, id, "edge type differs from image");
        if (img.src_port != e.src_port || img.tgt_port != e.tgt_port)
            throw Error(ErrorCode::NotStructurePreserving, id, "edge image changes a port");
    }
    for (const auto& [id, mapped] : f.edges)
        if (!src.has_edge(id))
            throw Error(ErrorCode::NotStructurePreserving, id, "mapped edge not in source");

    // fullness on vertices
    std::set<std::string> image_edges;
    for (const auto& [id, mapped] : f.edges) image_edges.insert(mapped);
    for (const auto& [id, p] : src.points()) {
        if (!p.is_vertex()) continue;
        const std::string& v = f.points.at(id);
        for (const auto& eid : tgt.in_edges(v))
            if (!image_edges.count(eid))
                throw Error(ErrorCode::NotFullOnVertices, id,
                            "edge '" + eid + "' at image vertex '" + v + "' not covered");
        for (const auto& eid : tgt.out_edges(v))
            if (!image_edges.count(eid))
                throw Error(ErrorCode::NotFullOnVertices, id,
                            "edge '" + eid + "' at image vertex '" + v + "' not covered");
    }
}

bool is_morphism(const OpenGraph& src, const OpenGraph& tgt, const Morphism& f) {
    try {
        check_morphism(src, tgt, f);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool is_mono(const Morphism& f) {
    std::set<std::string> seen;
    for (const auto& [id, mapped] : f.points)
        if (!seen.insert(mapped).second) return false;
    seen.clear();
    for (const auto& [id, mapped] : f.edges)
        if (!seen.insert(mapped).second) return false;
    return true;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    Morphism h;
    for (const auto& [id, mid] : f.points) h.points[id] = g.at_point(mid);
    for (const auto& [id, mid] : f.edges) h.edges[id] = g.at_edge(mid);
    return h;
}

Morphism invert(const Morphism& f) {
    Morphism inv;
    for (const auto& [id, mapped] : f.points) {
        if (!inv.points.emplace(mapped, id).second)
            throw Error(ErrorCode::NotStructurePreserving, mapped, "morphism is not injective");
    }
    for (const auto& [id, mapped] : f.edges) {
        if (!inv.edges.emplace(mapped, id).second)
            throw Error(ErrorCode::NotStructurePreserving, mapped, "morphism is not injective");
    }
    return inv;
}

} // namespace ogrw
