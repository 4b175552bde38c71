#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogrw/signature.hpp"

namespace ogrw {

enum class PointKind { Vertex, EdgePoint };

/// A point of an open-graph: a vertex labelled by a generator, or an
/// edge-point labelled by an object type.
struct Point {
    std::string id;
    PointKind kind = PointKind::EdgePoint;
    std::string label;  // generator name for vertices, object name for edge-points

    bool is_vertex() const { return kind == PointKind::Vertex; }
    bool operator==(const Point&) const = default;
};

/// A directed edge. The port index is present exactly on vertex ends:
/// src_port indexes into cod(gen(src)), tgt_port into dom(gen(tgt)).
struct Edge {
    std::string id;
    std::string src;
    std::string tgt;
    std::string type;  // object name
    std::optional<int> src_port;
    std::optional<int> tgt_port;

    bool operator==(const Edge&) const = default;
};

/// A typed open-graph: points and edges over a graphical signature, where
/// edge-points have at most one in-edge and one out-edge and vertices carry
/// exactly the edges their generator arity prescribes. Wires may dangle at
/// either end or close into circles. Construct with the add_* methods, then
/// treat as immutable; every library operation is a pure function.
class OpenGraph {
public:
    OpenGraph() = default;
    explicit OpenGraph(SignaturePtr sig) : sig_(std::move(sig)) {}

    void add_vertex(const std::string& id, const std::string& generator);
    void add_edge_point(const std::string& id, const std::string& type);
    void add_edge(const std::string& id, const std::string& src, const std::string& tgt,
                  const std::string& type, std::optional<int> src_port = std::nullopt,
                  std::optional<int> tgt_port = std::nullopt);

    /// Declares total orders on the boundary. Must enumerate In(G)/Out(G)
    /// exactly; checked by validate_graph.
    void set_boundary_order(std::vector<std::string> inputs, std::vector<std::string> outputs);
    void clear_boundary_order();

    const SignaturePtr& sig_ptr() const { return sig_; }
    const Signature& sig() const { return *sig_; }

    const std::map<std::string, Point>& points() const { return points_; }
    const std::map<std::string, Edge>& edges() const { return edges_; }

    bool has_point(const std::string& id) const { return points_.count(id) != 0; }
    bool has_edge(const std::string& id) const { return edges_.count(id) != 0; }
    const Point& point(const std::string& id) const;
    const Edge& edge(const std::string& id) const;

    /// Edge ids entering / leaving a point, sorted.
    const std::vector<std::string>& in_edges(const std::string& point_id) const;
    const std::vector<std::string>& out_edges(const std::string& point_id) const;

    bool is_input(const std::string& point_id) const;
    bool is_output(const std::string& point_id) const;
    bool is_isolated(const std::string& point_id) const;

    /// Boundary point ids, sorted.
    std::vector<std::string> inputs() const;
    std::vector<std::string> outputs() const;

    const std::optional<std::vector<std::string>>& input_order() const { return input_order_; }
    const std::optional<std::vector<std::string>>& output_order() const { return output_order_; }

    bool is_point_graph() const;          // edge-points only, no edges
    bool has_isolated_points() const;
    std::size_t edge_point_count() const;

    bool operator==(const OpenGraph& other) const;

private:
    SignaturePtr sig_;
    std::map<std::string, Point> points_;
    std::map<std::string, Edge> edges_;
    std::map<std::string, std::vector<std::string>> in_adj_;
    std::map<std::string, std::vector<std::string>> out_adj_;
    std::optional<std::vector<std::string>> input_order_;
    std::optional<std::vector<std::string>> output_order_;
};

/// Checks every open-graph invariant, reporting the first violation (in
/// sorted point/edge order) through an Error carrying the offending id and
/// one of: DOUBLE_IN, DOUBLE_OUT, ARITY_MISMATCH, PORT_CLASH,
/// VERTEX_VERTEX_EDGE, TYPE_MISMATCH, BAD_BOUNDARY_ORDER.
void validate_graph(const OpenGraph& g);

/// Allocates an id not taken according to `taken`, starting from `base` and
/// appending primes. Deterministic.
template <typename TakenFn>
std::string fresh_id(std::string base, TakenFn&& taken) {
    while (taken(base)) base += '\'';
    return base;
}

} // namespace ogrw
