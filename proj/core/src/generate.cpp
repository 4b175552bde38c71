#include "ogrw/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ogrw/error.hpp"
#include "ogrw/homeo.hpp"

namespace ogrw {

int Rng::upto(int n) {
    if (n <= 0) return 0;
    std::uniform_int_distribution<int> d(0, n - 1);
    return d(eng);
}

bool Rng::coin(double p) {
    std::bernoulli_distribution d(p);
    return d(eng);
}

namespace {

// mutable staging area; OpenGraph itself has no removal
struct Draft {
    struct DPoint {
        PointKind kind;
        std::string label;
    };
    struct DEdge {
        std::string src, tgt, type;
        std::optional<int> src_port, tgt_port;
    };
    std::map<std::string, DPoint> points;
    std::map<std::string, DEdge> edges;

    bool has_in(const std::string& p) const {
        for (const auto& [id, e] : edges)
            if (e.tgt == p) return true;
        return false;
    }
    bool has_out(const std::string& p) const {
        for (const auto& [id, e] : edges)
            if (e.src == p) return true;
        return false;
    }

    /// glue an output point onto an input point of the same type
    void fuse(const std::string& out_p, const std::string& in_p) {
        for (auto& [id, e] : edges) {
            if (e.src == in_p) e.src = out_p;
            if (e.tgt == in_p) e.tgt = out_p;
        }
        points.erase(in_p);
    }

    OpenGraph build(const SignaturePtr& sig) const {
        OpenGraph g(sig);
        for (const auto& [id, p] : points) {
            if (p.kind == PointKind::Vertex)
                g.add_vertex(id, p.label);
            else
                g.add_edge_point(id, p.label);
        }
        for (const auto& [id, e] : edges)
            g.add_edge(id, e.src, e.tgt, e.type, e.src_port, e.tgt_port);
        return g;
    }
};

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.upto(static_cast<int>(i))]);
}

std::string pick_object(const Signature& sig, Rng& rng) {
    std::vector<std::string> objs(sig.objects().begin(), sig.objects().end());
    return objs[rng.upto(static_cast<int>(objs.size()))];
}

} // namespace

OpenGraph random_graph(const SignaturePtr& sig, Rng& rng, const RandomGraphOptions& opts) {
    Draft d;
    std::vector<std::string> gens;
    for (const auto& [name, type] : sig->generators()) gens.push_back(name);

    int n_v = gens.empty() ? 0 : rng.upto(opts.max_vertices + 1);
    for (int i = 0; i < n_v; ++i) {
        std::string v = "v" + std::to_string(i);
        const std::string& gen = gens[rng.upto(static_cast<int>(gens.size()))];
        const GeneratorType& type = sig->generator(gen);
        d.points[v] = {PointKind::Vertex, gen};
        for (int j = 0; j < static_cast<int>(type.dom.size()); ++j) {
            std::string p = v + ".i" + std::to_string(j);
            d.points[p] = {PointKind::EdgePoint, type.dom[j]};
            d.edges[v + ".ei" + std::to_string(j)] = {p, v, type.dom[j], std::nullopt, j};
        }
        for (int j = 0; j < static_cast<int>(type.cod.size()); ++j) {
            std::string p = v + ".o" + std::to_string(j);
            d.points[p] = {PointKind::EdgePoint, type.cod[j]};
            d.edges[v + ".eo" + std::to_string(j)] = {v, p, type.cod[j], j, std::nullopt};
        }
    }
    int n_w = rng.upto(opts.max_bare_wires + 1);
    for (int i = 0; i < n_w; ++i) {
        std::string t = pick_object(*sig, rng);
        std::string a = "w" + std::to_string(i) + ".a", b = "w" + std::to_string(i) + ".b";
        d.points[a] = {PointKind::EdgePoint, t};
        d.points[b] = {PointKind::EdgePoint, t};
        d.edges["w" + std::to_string(i) + ".e"] = {a, b, t, std::nullopt, std::nullopt};
    }
    int n_c = rng.upto(opts.max_circles + 1);
    for (int i = 0; i < n_c; ++i) {
        std::string t = pick_object(*sig, rng);
        std::string a = "c" + std::to_string(i) + ".a", b = "c" + std::to_string(i) + ".b";
        d.points[a] = {PointKind::EdgePoint, t};
        d.points[b] = {PointKind::EdgePoint, t};
        d.edges["c" + std::to_string(i) + ".x"] = {a, b, t, std::nullopt, std::nullopt};
        d.edges["c" + std::to_string(i) + ".y"] = {b, a, t, std::nullopt, std::nullopt};
    }
    int n_z = rng.upto(opts.max_isolated + 1);
    for (int i = 0; i < n_z; ++i)
        d.points["z" + std::to_string(i)] = {PointKind::EdgePoint, pick_object(*sig, rng)};

    while (rng.coin(opts.fuse_probability)) {
        std::vector<std::pair<std::string, std::string>> candidates;
        for (const auto& [op, opoint] : d.points) {
            if (opoint.kind == PointKind::Vertex || d.has_out(op)) continue;
            for (const auto& [ip, ipoint] : d.points) {
                if (ipoint.kind == PointKind::Vertex || d.has_in(ip)) continue;
                if (ip == op || ipoint.label != opoint.label) continue;
                candidates.emplace_back(op, ip);
            }
        }
        if (candidates.empty()) break;
        auto [op, ip] = candidates[rng.upto(static_cast<int>(candidates.size()))];
        d.fuse(op, ip);
    }

    OpenGraph g = d.build(sig);
    int n_s = rng.upto(opts.max_subdivisions + 1);
    for (int i = 0; i < n_s && !g.edges().empty(); ++i) {
        std::vector<std::string> eids;
        for (const auto& [id, e] : g.edges()) eids.push_back(id);
        g = subdivide_edge(g, eids[rng.upto(static_cast<int>(eids.size()))]);
    }
    validate_graph(g);
    return g;
}

SubgraphPick random_subgraph(const OpenGraph& host, Rng& rng, bool want_nonempty) {
    std::set<std::string> vertices;
    for (const auto& [id, p] : host.points())
        if (p.is_vertex() && rng.coin()) vertices.insert(id);

    std::set<std::string> edge_ids;
    for (const auto& [id, e] : host.edges()) {
        bool adjacent = vertices.count(e.src) || vertices.count(e.tgt);
        bool interior =
            !host.point(e.src).is_vertex() && !host.point(e.tgt).is_vertex() && rng.coin(0.3);
        if (adjacent || interior) edge_ids.insert(id);
    }

    if (want_nonempty && vertices.empty() && edge_ids.empty()) {
        std::vector<std::string> host_vertices;
        for (const auto& [id, p] : host.points())
            if (p.is_vertex()) host_vertices.push_back(id);
        if (!host_vertices.empty()) {
            vertices.insert(host_vertices[rng.upto(static_cast<int>(host_vertices.size()))]);
            for (const auto& [id, e] : host.edges())
                if (vertices.count(e.src) || vertices.count(e.tgt)) edge_ids.insert(id);
        } else if (!host.edges().empty()) {
            std::vector<std::string> eids;
            for (const auto& [id, e] : host.edges()) eids.push_back(id);
            edge_ids.insert(eids[rng.upto(static_cast<int>(eids.size()))]);
        }
    }

    std::set<std::string> point_ids = vertices;
    for (const auto& eid : edge_ids) {
        point_ids.insert(host.edge(eid).src);
        point_ids.insert(host.edge(eid).tgt);
    }

    SubgraphPick pick;
    pick.sub = OpenGraph(host.sig_ptr());
    for (const auto& pid : point_ids) {
        const Point& p = host.point(pid);
        if (p.is_vertex())
            pick.sub.add_vertex(pid, p.label);
        else
            pick.sub.add_edge_point(pid, p.label);
        pick.embed.points[pid] = pid;
    }
    for (const auto& eid : edge_ids) {
        const Edge& e = host.edge(eid);
        pick.sub.add_edge(eid, e.src, e.tgt, e.type, e.src_port, e.tgt_port);
        pick.embed.edges[eid] = eid;
    }
    validate_graph(pick.sub);
    return pick;
}

OpenGraph random_graph_with_interface(const SignaturePtr& sig, const Word& in_word,
                                      const Word& out_word, Rng& rng, int max_extra_vertices) {
    std::map<std::string, std::string> absorb, emit;  // type -> generator
    for (const auto& [name, type] : sig->generators()) {
        if (type.dom.size() == 1 && type.cod.empty()) absorb.emplace(type.dom[0], name);
        if (type.dom.empty() && type.cod.size() == 1) emit.emplace(type.cod[0], name);
    }

    std::vector<std::string> gens;
    for (const auto& [name, type] : sig->generators()) gens.push_back(name);
    std::vector<std::string> vertex_gen;
    int n_v = gens.empty() ? 0 : rng.upto(max_extra_vertices + 1);
    for (int i = 0; i < n_v; ++i) vertex_gen.push_back(gens[rng.upto(static_cast<int>(gens.size()))]);

    // per-type surplus of sources over sinks, to be balanced with
    // single-legged generators
    std::map<std::string, int> surplus;
    for (const auto& t : in_word) ++surplus[t];
    for (const auto& t : out_word) --surplus[t];
    for (const auto& gen : vertex_gen) {
        const GeneratorType& type = sig->generator(gen);
        for (const auto& t : type.cod) ++surplus[t];
        for (const auto& t : type.dom) --surplus[t];
    }
    for (const auto& [t, n] : surplus) {
        const auto& table = n > 0 ? absorb : emit;
        auto it = table.find(t);
        if (n != 0 && it == table.end())
            throw Error(ErrorCode::ValidationError, t,
                        "signature lacks the single-legged generators needed to balance");
        for (int i = 0; i < std::abs(n); ++i) vertex_gen.push_back(it->second);
    }

    struct Slot {
        std::string point;  // set for reserved boundary points
        std::string vertex;
        int port = -1;
    };
    std::map<std::string, std::vector<Slot>> sources, sinks;

    OpenGraph g(sig);
    std::vector<std::string> in_points, out_points;
    for (std::size_t i = 0; i < in_word.size(); ++i) {
        std::string p = "gi" + std::to_string(i);
        g.add_edge_point(p, in_word[i]);
        in_points.push_back(p);
        sources[in_word[i]].push_back({p, "", -1});
    }
    for (std::size_t i = 0; i < out_word.size(); ++i) {
        std::string p = "go" + std::to_string(i);
        g.add_edge_point(p, out_word[i]);
        out_points.push_back(p);
        sinks[out_word[i]].push_back({p, "", -1});
    }
    for (std::size_t i = 0; i < vertex_gen.size(); ++i) {
        std::string v = "u" + std::to_string(i);
        const GeneratorType& type = sig->generator(vertex_gen[i]);
        g.add_vertex(v, vertex_gen[i]);
        for (int j = 0; j < static_cast<int>(type.dom.size()); ++j)
            sinks[type.dom[j]].push_back({"", v, j});
        for (int j = 0; j < static_cast<int>(type.cod.size()); ++j)
            sources[type.cod[j]].push_back({"", v, j});
    }

    int mid = 0, eid = 0;
    for (auto& [t, srcs] : sources) {
        auto& snks = sinks[t];
        shuffle_vec(snks, rng);
        for (std::size_t i = 0; i < srcs.size(); ++i) {
            const Slot& from = srcs[i];
            const Slot& to = snks[i];
            bool from_vertex = from.point.empty();
            bool to_vertex = to.point.empty();
            if (!from_vertex && !to_vertex) {
                // boundary to boundary: a bare wire
                g.add_edge("e" + std::to_string(eid++), from.point, to.point, t);
                continue;
            }
            if (from_vertex && to_vertex) {
                std::string m = "m" + std::to_string(mid++);
                g.add_edge_point(m, t);
                g.add_edge("e" + std::to_string(eid++), from.vertex, m, t, from.port, std::nullopt);
                g.add_edge("e" + std::to_string(eid++), m, to.vertex, t, std::nullopt, to.port);
            } else if (from_vertex) {
                g.add_edge("e" + std::to_string(eid++), from.vertex, to.point, t, from.port,
                           std::nullopt);
            } else {
                g.add_edge("e" + std::to_string(eid++), from.point, to.vertex, t, std::nullopt,
                           to.port);
            }
        }
    }
    g.set_boundary_order(std::move(in_points), std::move(out_points));
    validate_graph(g);
    return g;
}

std::optional<RuleAt> random_rule_at(const OpenGraph& host, Rng& rng) {
    SubgraphPick pick = random_subgraph(host, rng, /*want_nonempty=*/true);
    if (pick.sub.points().empty()) return std::nullopt;

    Word in_word, out_word;
    std::vector<std::string> lhs_in = pick.sub.inputs(), lhs_out = pick.sub.outputs();
    for (const auto& p : lhs_in) in_word.push_back(pick.sub.point(p).label);
    for (const auto& p : lhs_out) out_word.push_back(pick.sub.point(p).label);

    OpenGraph rhs = random_graph_with_interface(host.sig_ptr(), in_word, out_word, rng);
    std::vector<std::pair<std::string, std::string>> in_map, out_map;
    for (std::size_t i = 0; i < lhs_in.size(); ++i)
        in_map.emplace_back(lhs_in[i], (*rhs.input_order())[i]);
    for (std::size_t i = 0; i < lhs_out.size(); ++i)
        out_map.emplace_back(lhs_out[i], (*rhs.output_order())[i]);
    rhs.clear_boundary_order();

    RuleAt result{make_rule(pick.sub, rhs, in_map, out_map), pick.embed};
    return result;
}

Cospan random_cospan(const SignaturePtr& sig, Rng& rng, const std::optional<Word>& dom,
                     const std::optional<Word>& cod) {
    if (dom || cod) {
        Word in_word = dom.value_or(Word{});
        Word out_word = cod.value_or(Word{});
        Cospan c;
        c.dom = in_word;
        c.cod = out_word;
        c.middle = random_graph_with_interface(sig, in_word, out_word, rng);
        validate_cospan(c);
        return c;
    }
    RandomGraphOptions opts;
    opts.max_isolated = 0;
    OpenGraph g = random_graph(sig, rng, opts);
    std::vector<std::string> in = g.inputs(), out = g.outputs();
    shuffle_vec(in, rng);
    shuffle_vec(out, rng);
    Cospan c;
    for (const auto& p : in) c.dom.push_back(g.point(p).label);
    for (const auto& p : out) c.cod.push_back(g.point(p).label);
    g.set_boundary_order(std::move(in), std::move(out));
    c.middle = std::move(g);
    validate_cospan(c);
    return c;
}

CoherentSpan random_plug_span(const OpenGraph& g, const OpenGraph& h, Rng& rng) {
    std::vector<std::pair<std::string, std::string>> forward, backward;
    for (const auto& og : g.outputs())
        for (const auto& ih : h.inputs())
            if (g.point(og).label == h.point(ih).label) forward.emplace_back(og, ih);
    for (const auto& ig : g.inputs())
        for (const auto& oh : h.outputs())
            if (g.point(ig).label == h.point(oh).label) backward.emplace_back(ig, oh);
    shuffle_vec(forward, rng);
    shuffle_vec(backward, rng);

    CoherentSpan span;
    span.apex = OpenGraph(g.sig_ptr());
    span.left = g;
    span.left.clear_boundary_order();
    span.right = h;
    span.right.clear_boundary_order();
    std::set<std::string> used_g, used_h;
    int idx = 0;
    auto take = [&](const std::vector<std::pair<std::string, std::string>>& pairs) {
        for (const auto& [gp, hp] : pairs) {
            if (used_g.count(gp) || used_h.count(hp) || !rng.coin(0.7)) continue;
            used_g.insert(gp);
            used_h.insert(hp);
            std::string k = "k" + std::to_string(idx++);
            span.apex.add_edge_point(k, g.point(gp).label);
            span.to_left.points[k] = gp;
            span.to_right.points[k] = hp;
        }
    };
    take(forward);
    take(backward);
    return span;
}

} // namespace ogrw
