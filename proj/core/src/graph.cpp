#include "ogrw/graph.hpp"

#include <algorithm>

#include "ogrw/error.hpp"

namespace ogrw {

namespace {
const std::vector<std::string> kNoEdges;
}

void OpenGraph::add_vertex(const std::string& id, const std::string& generator) {
    if (points_.count(id))
        throw Error(ErrorCode::ValidationError, id, "duplicate point id");
    points_[id] = Point{id, PointKind::Vertex, generator};
}

void OpenGraph::add_edge_point(const std::string& id, const std::string& type) {
    if (points_.count(id))
        throw Error(ErrorCode::ValidationError, id, "duplicate point id");
    points_[id] = Point{id, PointKind::EdgePoint, type};
}

void OpenGraph::add_edge(const std::string& id, const std::string& src, const std::string& tgt,
                         const std::string& type, std::optional<int> src_port,
                         std::optional<int> tgt_port) {
    if (edges_.count(id))
        throw Error(ErrorCode::ValidationError, id, "duplicate edge id");
    if (!points_.count(src))
        throw Error(ErrorCode::ValidationError, id, "edge source '" + src + "' does not exist");
    if (!points_.count(tgt))
        throw Error(ErrorCode::ValidationError, id, "edge target '" + tgt + "' does not exist");
    edges_[id] = Edge{id, src, tgt, type, src_port, tgt_port};
    auto insert_sorted = [](std::vector<std::string>& v, const std::string& e) {
        v.insert(std::lower_bound(v.begin(), v.end(), e), e);
    };
    insert_sorted(out_adj_[src], id);
    insert_sorted(in_adj_[tgt], id);
}

void OpenGraph::set_boundary_order(std::vector<std::string> inputs,
                                   std::vector<std::string> outputs) {
    input_order_ = std::move(inputs);
    output_order_ = std::move(outputs);
}

void OpenGraph::clear_boundary_order() {
    input_order_.reset();
    output_order_.reset();
}

const Point& OpenGraph::point(const std::string& id) const {
    auto it = points_.find(id);
    if (it == points_.end())
        throw Error(ErrorCode::ValidationError, id, "no such point");
    return it->second;
}

const Edge& OpenGraph::edge(const std::string& id) const {
    auto it = edges_.find(id);
    if (it == edges_.end())
        throw Error(ErrorCode::ValidationError, id, "no such edge");
    return it->second;
}

const std::vector<std::string>& OpenGraph::in_edges(const std::string& point_id) const {
    auto it = in_adj_.find(point_id);
    return it == in_adj_.end() ? kNoEdges : it->second;
}

const std::vector<std::string>& OpenGraph::out_edges(const std::string& point_id) const {
    auto it = out_adj_.find(point_id);
    return it == out_adj_.end() ? kNoEdges : it->second;
}

bool OpenGraph::is_input(const std::string& point_id) const {
    return !point(point_id).is_vertex() && in_edges(point_id).empty();
}

bool OpenGraph::is_output(const std::string& point_id) const {
    return !point(point_id).is_vertex() && out_edges(point_id).empty();
}

bool OpenGraph::is_isolated(const std::string& point_id) const {
    return !point(point_id).is_vertex() && in_edges(point_id).empty() &&
           out_edges(point_id).empty();
}

std::vector<std::string> OpenGraph::inputs() const {
    std::vector<std::string> result;
    for (const auto& [id, p] : points_)
        if (!p.is_vertex() && in_edges(id).empty()) result.push_back(id);
    return result;
}

std::vector<std::string> OpenGraph::outputs() const {
    std::vector<std::string> result;
    for (const auto& [id, p] : points_)
        if (!p.is_vertex() && out_edges(id).empty()) result.push_back(id);
    return result;
}

bool OpenGraph::is_point_graph() const {
    if (!edges_.empty()) return false;
    for (const auto& [id, p] : points_)
        if (p.is_vertex()) return false;
    return true;
}

bool OpenGraph::has_isolated_points() const {
    for (const auto& [id, p] : points_)
        if (!p.is_vertex() && in_edges(id).empty() && out_edges(id).empty()) return true;
    return false;
}

std::size_t OpenGraph::edge_point_count() const {
    std::size_t n = 0;
    for (const auto& [id, p] : points_)
        if (!p.is_vertex()) ++n;
    return n;
}

bool OpenGraph::operator==(const OpenGraph& other) const {
    bool sigs_equal = (sig_ == other.sig_) || (sig_ && other.sig_ && *sig_ == *other.sig_);
    return sigs_equal && points_ == other.points_ && edges_ == other.edges_ &&
           input_order_ == other.input_order_ && output_order_ == other.output_order_;
}

namespace {

void validate_order(const OpenGraph& g, const std::vector<std::string>& order,
                    const std::vector<std::string>& expected, const char* which) {
    std::vector<std::string> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::BadBoundaryOrder, sorted[0],
                    std::string(which) + " order repeats a point");
    if (sorted != expected)
        throw Error(ErrorCode::BadBoundaryOrder, sorted.empty() ? "" : sorted[0],
                    std::string(which) + " order does not enumerate the boundary");
    (void)g;
}

} // namespace

void validate_graph(const OpenGraph& g) {
    const Signature& sig = g.sig();

    for (const auto& [id, p] : g.points()) {
        if (p.is_vertex()) {
            if (!sig.has_generator(p.label))
                throw Error(ErrorCode::TypeMismatch, id, "unknown generator '" + p.label + "'");
            const GeneratorType& type = sig.generator(p.label);

            const auto& ins = g.in_edges(id);
            if (ins.size() != type.dom.size())
                throw Error(ErrorCode::ArityMismatch, id,
                            "expected " + std::to_string(type.dom.size()) + " in-edges, found " +
                                std::to_string(ins.size()));
            std::vector<bool> seen(type.dom.size(), false);
            for (const auto& eid : ins) {
                const Edge& e = g.edge(eid);
                if (!e.tgt_port)
                    throw Error(ErrorCode::ArityMismatch, eid, "missing tgt_port at vertex " + id);
                int k = *e.tgt_port;
                if (k < 0 || k >= static_cast<int>(type.dom.size()))
                    throw Error(ErrorCode::ArityMismatch, eid, "tgt_port out of range");
                if (seen[k])
                    throw Error(ErrorCode::PortClash, eid,
                                "two in-edges at port " + std::to_string(k) + " of " + id);
                seen[k] = true;
                if (e.type != type.dom[k])
                    throw Error(ErrorCode::TypeMismatch, eid,
                                "edge type '" + e.type + "' does not match dom slot");
            }

            const auto& outs = g.out_edges(id);
            if (outs.size() != type.cod.size())
                throw Error(ErrorCode::ArityMismatch, id,
                            "expected " + std::to_string(type.cod.size()) + " out-edges, found " +
                                std::to_string(outs.size()));
            std::vector<bool> seen_out(type.cod.size(), false);
            for (const auto& eid : outs) {
                const Edge& e = g.edge(eid);
                if (!e.src_port)
                    throw Error(ErrorCode::ArityMismatch, eid, "missing src_port at vertex " + id);
                int k = *e.src_port;
                if (k < 0 || k >= static_cast<int>(type.cod.size()))
                    throw Error(ErrorCode::ArityMismatch, eid, "src_port out of range");
                if (seen_out[k])
                    throw Error(ErrorCode::PortClash, eid,
                                "two out-edges at port " + std::to_string(k) + " of " + id);
                seen_out[k] = true;
                if (e.type != type.cod[k])
                    throw Error(ErrorCode::TypeMismatch, eid,
                                "edge type '" + e.type + "' does not match cod slot");
            }
        } else {
            if (!sig.has_object(p.label))
                throw Error(ErrorCode::TypeMismatch, id, "unknown object '" + p.label + "'");
            if (g.in_edges(id).size() > 1)
                throw Error(ErrorCode::DoubleIn, id, "edge-point has two in-edges");
            if (g.out_edges(id).size() > 1)
                throw Error(ErrorCode::DoubleOut, id, "edge-point has two out-edges");
        }
    }

    for (const auto& [id, e] : g.edges()) {
        const Point& src = g.point(e.src);
        const Point& tgt = g.point(e.tgt);
        if (src.is_vertex() && tgt.is_vertex())
            throw Error(ErrorCode::VertexVertexEdge, id, "edge connects two vertices");
        if (!src.is_vertex() && src.label != e.type)
            throw Error(ErrorCode::TypeMismatch, id, "source edge-point type differs");
        if (!tgt.is_vertex() && tgt.label != e.type)
            throw Error(ErrorCode::TypeMismatch, id, "target edge-point type differs");
        if (!src.is_vertex() && e.src_port)
            throw Error(ErrorCode::TypeMismatch, id, "src_port on edge-point source");
        if (!tgt.is_vertex() && e.tgt_port)
            throw Error(ErrorCode::TypeMismatch, id, "tgt_port on edge-point target");
    }

    if (g.input_order().has_value() != g.output_order().has_value())
        throw Error(ErrorCode::BadBoundaryOrder, "", "only one of the boundary orders is set");
    if (g.input_order()) {
        validate_order(g, *g.input_order(), g.inputs(), "input");
        validate_order(g, *g.output_order(), g.outputs(), "output");
    }
}

} // namespace ogrw
